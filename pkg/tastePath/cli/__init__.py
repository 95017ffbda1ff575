from tastePath.cli.app import app, main

__all__ = ["app", "main"]
