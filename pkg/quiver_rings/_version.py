version = "0.1.0"

__all__ = ("version",)
