from injector import Module, provider, singleton

from tastePath.core.run_config import RunConfig
from tastePath.stores.artifacts.impl import FileArtifactStore
from tastePath.stores.artifacts.interface import IArtifactStore
from tastePath.stores.records import CandidateStore, DictionaryStore, PlantedStore, TrajectoryStore


class StoresModule(Module):
    @singleton
    @provider
    def provide_artifact_store(self, run_config: RunConfig) -> IArtifactStore:
        return FileArtifactStore(run_config.output_dir)

    @singleton
    @provider
    def provide_trajectory_store(self) -> TrajectoryStore:
        return TrajectoryStore()

    @singleton
    @provider
    def provide_candidate_store(self) -> CandidateStore:
        return CandidateStore()

    @singleton
    @provider
    def provide_dictionary_store(self) -> DictionaryStore:
        return DictionaryStore()

    @singleton
    @provider
    def provide_planted_store(self) -> PlantedStore:
        return PlantedStore()
