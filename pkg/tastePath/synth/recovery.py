from typing import Sequence, Tuple

from tastePath import constants
from tastePath.core.exceptions import EmptyInputError
from tastePath.dict_learn import fit, select_topn
from tastePath.logger import get_logger
from tastePath.models.pathlet import LearnConfig, PathletDictionary
from tastePath.models.synth import PlantedCorpus, PlantedSpec, RecoveryReport
from tastePath.pathlet_graph import encode, induce_graph, mine_candidates
from tastePath.synth.planted import generate_planted

logger = get_logger("tastePath.synth")


def contains(longer: Tuple[int, ...], shorter: Tuple[int, ...]) -> bool:
    """True when ``shorter`` occurs contiguously inside ``longer``"""
    n = len(shorter)
    return any(longer[i : i + n] == shorter for i in range(len(longer) - n + 1))


def recovery_report(learned: PathletDictionary, planted: Sequence[Tuple[int, ...]]) -> RecoveryReport:
    """
    A planted pathlet counts as recovered when it appears verbatim, or intact inside a
    longer pathlet, among the first |planted| learned pathlets.
    """
    if not len(learned) or not planted:
        raise EmptyInputError("recovery needs a learned dictionary and planted pathlets")
    top = [p.ranks for p in learned.pathlets[: len(planted)]]
    recovered, missed = [], []
    for p in planted:
        (recovered if any(contains(q, tuple(p)) for q in top) else missed).append(tuple(p))
    return RecoveryReport(
        score=len(recovered) / len(planted), n_planted=len(planted), recovered=recovered, missed=missed
    )


def recovery_score(learned: PathletDictionary, planted: Sequence[Tuple[int, ...]]) -> float:
    return recovery_report(learned, planted).score


def learn_dictionary(
    corpus: PlantedCorpus,
    l_max: int = constants.DEFAULT_L_MAX,
    top_m: int = constants.DEFAULT_TOP_M,
    cfg: LearnConfig = LearnConfig(),
) -> PathletDictionary:
    """Mine, fit and select on a synthetic corpus, keeping at least |planted| pathlets"""
    candidates = mine_candidates(corpus.trajectories, l_max, top_m)
    encoding = encode(corpus.trajectories, candidates, induce_graph(corpus.trajectories))
    model = fit(encoding.P_mat, encoding.D0_mat, cfg)
    return select_topn(model.alpha, candidates, max(cfg.top_n, len(corpus.planted)))


def run_recovery(
    spec: PlantedSpec,
    l_max: int = constants.DEFAULT_L_MAX,
    top_m: int = constants.DEFAULT_TOP_M,
    cfg: LearnConfig = LearnConfig(),
) -> RecoveryReport:
    corpus = generate_planted(spec)
    report = recovery_report(learn_dictionary(corpus, l_max, top_m, cfg), corpus.planted)
    logger.info(f"recovered {len(report.recovered)}/{report.n_planted} planted pathlets (score {report.score:.3f})")
    return report
