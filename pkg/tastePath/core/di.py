from dataclasses import dataclass
from typing import Optional

from injector import Binder, Injector, Module

from tastePath.core.config import settings
from tastePath.core.exceptions import UsageError
from tastePath.core.run_config import RunConfig


@dataclass(frozen=True)
class ExecutionOptions:
    """Process-level knobs that are not part of the run's reproducible config"""

    threads: int = 1


class CoreModule(Module):
    def __init__(self, run_config: RunConfig, threads: int):
        self.run_config = run_config
        self.threads = threads

    def configure(self, binder: Binder) -> None:
        binder.bind(RunConfig, to=self.run_config)
        binder.bind(ExecutionOptions, to=ExecutionOptions(threads=self.threads))


def setup_injector(run_config: Optional[RunConfig] = None, threads: Optional[int] = None) -> Injector:
    """Initialize dependency injection container for one run"""
    from tastePath.predict.di import ClassifiersModule
    from tastePath.services.di import ServicesModule
    from tastePath.stores.di import StoresModule

    threads = settings.THREADS if threads is None else threads
    if threads < 1:
        raise UsageError("--threads must be at least 1")
    if run_config is None:
        run_config = RunConfig.load(settings.DEFAULT_CONFIG_PATH)
    injector = Injector(
        [
            CoreModule(run_config, threads),
            StoresModule(),
            ClassifiersModule(),
            ServicesModule(),
        ]
    )
    get_injector._injector = injector
    return injector


def get_injector() -> Injector:
    """Get global injector instance"""
    if not hasattr(get_injector, "_injector"):
        get_injector._injector = setup_injector()
    return get_injector._injector
