from tastePath.logger.logger import ColorLogger, get_logger, set_level, setup_logger

__all__ = ["ColorLogger", "get_logger", "set_level", "setup_logger"]
