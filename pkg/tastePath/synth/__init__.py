from tastePath.synth.planted import generate_planted, synthetic_rank_map
from tastePath.synth.recovery import learn_dictionary, recovery_report, recovery_score, run_recovery

__all__ = [
    "generate_planted",
    "learn_dictionary",
    "recovery_report",
    "recovery_score",
    "run_recovery",
    "synthetic_rank_map",
]
