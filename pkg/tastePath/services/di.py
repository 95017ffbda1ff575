from injector import Module, provider, singleton

from tastePath.core.di import ExecutionOptions
from tastePath.core.run_config import RunConfig
from tastePath.predict.classifiers.factory import ClassifierFactory
from tastePath.stores.artifacts.interface import IArtifactStore
from tastePath.stores.records import CandidateStore, DictionaryStore, PlantedStore, TrajectoryStore

from .interfaces import IPipelineService
from .pipeline_service import PipelineService


class ServicesModule(Module):
    @singleton
    @provider
    def provide_pipeline_service(
        self,
        run_config: RunConfig,
        options: ExecutionOptions,
        artifacts: IArtifactStore,
        factory: ClassifierFactory,
        trajectory_store: TrajectoryStore,
        candidate_store: CandidateStore,
        dictionary_store: DictionaryStore,
        planted_store: PlantedStore,
    ) -> IPipelineService:
        return PipelineService(
            run_config,
            artifacts,
            factory,
            trajectory_store,
            candidate_store,
            dictionary_store,
            planted_store,
            n_jobs=options.threads,
        )
