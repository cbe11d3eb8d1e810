"""
Prometheus collectors recorded by the command-line services.
"""
from src.monitoring import metrics

__all__ = ["metrics"]
