from typing import Any, Dict, Tuple

from tastePath.constants import CandidateKind
from tastePath.models.allocation import CandidatePair
from tastePath.models.pathlet import Pathlet, PathletDictionary
from tastePath.models.trajectory import RankMap, RankTrajectory
from tastePath.stores.base import JsonlStore, PathLike


def pair_record(pair: CandidatePair) -> Dict[str, str]:
    return {"user": pair.user, "genre": pair.genre, "kind": pair.kind.value}


def pair_from_record(record: Dict[str, Any]) -> CandidatePair:
    return CandidatePair(record["user"], record["genre"], CandidateKind.parse(record["kind"]))


class TrajectoryStore(JsonlStore[RankTrajectory]):
    """Rank trajectories with their anchor pair and rank map"""

    def _to_record(self, traj: RankTrajectory) -> Dict[str, Any]:
        return {
            "anchor": pair_record(traj.anchor),
            "ranks": list(traj.ranks),
            "rank_map": dict(sorted(traj.rank_map.ranks.items(), key=lambda kv: kv[1])),
        }

    def _from_record(self, record: Dict[str, Any]) -> RankTrajectory:
        anchor = pair_from_record(record["anchor"])
        rank_map = RankMap(anchor=anchor.genre, ranks={g: int(r) for g, r in record["rank_map"].items()})
        return RankTrajectory(ranks=tuple(int(r) for r in record["ranks"]), anchor=anchor, rank_map=rank_map)


class CandidateStore(JsonlStore[Pathlet]):
    def _to_record(self, pathlet: Pathlet) -> Dict[str, Any]:
        return {"ranks": list(pathlet.ranks), "support": pathlet.support}

    def _from_record(self, record: Dict[str, Any]) -> Pathlet:
        return Pathlet(ranks=tuple(int(r) for r in record["ranks"]), support=int(record["support"]))


class DictionaryStore(JsonlStore[Tuple[Pathlet, float]]):
    """Selected pathlets in dictionary order with their influence"""

    def _to_record(self, item: Tuple[Pathlet, float]) -> Dict[str, Any]:
        pathlet, influence = item
        return {"ranks": list(pathlet.ranks), "support": pathlet.support, "influence": float(influence)}

    def _from_record(self, record: Dict[str, Any]) -> Tuple[Pathlet, float]:
        pathlet = Pathlet(ranks=tuple(int(r) for r in record["ranks"]), support=int(record["support"]))
        return pathlet, float(record["influence"])

    def save(self, path: PathLike, dictionary: PathletDictionary) -> int:
        return self.write(path, zip(dictionary.pathlets, dictionary.influence))

    def load(self, path: PathLike) -> PathletDictionary:
        items = self.read(path)
        return PathletDictionary(pathlets=[p for p, _ in items], influence=[i for _, i in items])


class PlantedStore(JsonlStore[Tuple[Tuple[int, ...], int]]):
    """Planted synthetic pathlets with their complete planting counts"""

    def _to_record(self, item: Tuple[Tuple[int, ...], int]) -> Dict[str, Any]:
        ranks, count = item
        return {"ranks": list(ranks), "planted": int(count)}

    def _from_record(self, record: Dict[str, Any]) -> Tuple[Tuple[int, ...], int]:
        return tuple(int(r) for r in record["ranks"]), int(record["planted"])
