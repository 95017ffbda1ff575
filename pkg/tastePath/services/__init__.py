from tastePath.services.interfaces import IPipelineService
from tastePath.services.pipeline_service import PipelineService

__all__ = ["IPipelineService", "PipelineService"]
