import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional

from colorama import Fore, Style, init

from tastePath.core.config import settings

init()

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
ROOT_NAME = "tastePath"

_PALETTE = {
    logging.DEBUG: Fore.CYAN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED + Style.BRIGHT,
}


class ColorLogger(logging.Logger):
    """Logger with a batched warning for per-item skips inside a stage"""

    def counted_warning(self, count: int, msg: str, *args, **kwargs) -> None:
        if count <= 0 or not self.isEnabledFor(logging.WARNING):
            return
        self._log(logging.WARNING, f"{msg} (count={count})", args, **kwargs)


class ColorFormatter(logging.Formatter):
    def __init__(self, colored: bool = True):
        super().__init__(LOG_FORMAT)
        self.colored = colored

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        tint = _PALETTE.get(record.levelno) if self.colored else None
        return f"{tint}{line}{Style.RESET_ALL}" if tint else line


def _handlers(log_files: Iterable[str], console: bool) -> List[logging.Handler]:
    handlers: List[logging.Handler] = []
    for target in map(Path, log_files):
        target.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.FileHandler(target)
        handler.setFormatter(ColorFormatter(colored=False))
        handlers.append(handler)
    if console:
        stream = logging.StreamHandler()
        stream.setFormatter(ColorFormatter())
        handlers.append(stream)
    return handlers


def _default_level() -> int:
    return logging.getLevelName(settings.LOG_LEVEL.upper())


def setup_logger(
    name: str = ROOT_NAME,
    log_files: Optional[List[str]] = None,
    level: int = logging.INFO,
    console: bool = True,
) -> ColorLogger:
    """
    Build a non-propagating ColorLogger writing to the console and/or files.

    :param name: Logger name, dotted under ``tastePath`` by convention.
    :param log_files: Files to append to; parent directories are created.
    :param level: Level applied to the logger and each handler.
    :param console: Attach a coloured stderr handler.
    """
    logging.setLoggerClass(ColorLogger)
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.propagate = False
    for handler in _handlers(log_files or [], console):
        handler.setLevel(level)
        logger.addHandler(handler)
    return logger  # type: ignore[return-value]


shared_logger = setup_logger(
    log_files=settings.LOG_FILES,
    level=_default_level(),
    console=settings.LOG_CONSOLE,
)

_registry: Dict[str, ColorLogger] = {ROOT_NAME: shared_logger}


def get_logger(
    name: Optional[str] = None,
    log_files: Optional[List[str]] = None,
    level: Optional[int] = None,
    console: Optional[bool] = None,
) -> ColorLogger:
    """
    Return the logger called ``name``, creating it on first request.

    Unset arguments fall back to LOG_FILES, LOG_LEVEL and LOG_CONSOLE.
    """
    key = name or ROOT_NAME
    if key not in _registry:
        _registry[key] = setup_logger(
            name=key,
            log_files=settings.LOG_FILES if log_files is None else log_files,
            level=_default_level() if level is None else level,
            console=settings.LOG_CONSOLE if console is None else console,
        )
    return _registry[key]


def set_level(level: str) -> None:
    numeric = logging.getLevelName(level.upper())
    for logger in _registry.values():
        logger.setLevel(numeric)
        for handler in logger.handlers:
            handler.setLevel(numeric)
