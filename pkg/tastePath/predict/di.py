from injector import Module, provider, singleton

from tastePath.core.di import ExecutionOptions
from tastePath.core.run_config import RunConfig
from tastePath.predict.classifiers.factory import ClassifierFactory


class ClassifiersModule(Module):
    @singleton
    @provider
    def provide_classifier_factory(self, run_config: RunConfig, options: ExecutionOptions) -> ClassifierFactory:
        return ClassifierFactory(run_config.forest, n_jobs=options.threads)
