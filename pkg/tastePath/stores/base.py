import hashlib
import json
import os
import tempfile
from abc import ABC, abstractmethod
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Generic, Iterable, Iterator, List, TypeVar, Union

from tastePath.stores.exceptions import ArtifactError

ModelType = TypeVar("ModelType")

PathLike = Union[str, Path]


@contextmanager
def atomic_path(path: PathLike) -> Iterator[Path]:
    """Yield a temporary sibling of ``path``, renamed over it on success and removed on failure"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    os.close(fd)
    try:
        yield Path(tmp)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def write_text(path: PathLike, text: str) -> None:
    with atomic_path(path) as tmp:
        tmp.write_text(text, encoding="utf-8")


def write_json(path: PathLike, payload: Any) -> None:
    write_text(path, json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


def read_json(path: PathLike) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ArtifactError(f"cannot read {path}: {e}") from e


def file_sha256(path: PathLike) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(1 << 20), b""):
            digest.update(block)
    return digest.hexdigest()


class JsonlStore(ABC, Generic[ModelType]):
    """One JSON record per line with sorted keys, written atomically"""

    @abstractmethod
    def _to_record(self, model: ModelType) -> Dict[str, Any]:
        pass

    @abstractmethod
    def _from_record(self, record: Dict[str, Any]) -> ModelType:
        pass

    def write(self, path: PathLike, models: Iterable[ModelType]) -> int:
        count = 0
        with atomic_path(path) as tmp:
            with open(tmp, "w", encoding="utf-8", newline="\n") as f:
                for model in models:
                    f.write(json.dumps(self._to_record(model), sort_keys=True, ensure_ascii=False) + "\n")
                    count += 1
        return count

    def read(self, path: PathLike) -> List[ModelType]:
        path = Path(path)
        if not path.exists():
            raise ArtifactError(f"{path} does not exist")
        models = []
        with open(path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    models.append(self._from_record(json.loads(line)))
                except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
                    raise ArtifactError(f"{path}:{lineno}: bad record ({e})") from e
        return models
