from src.utils.config import settings, Settings

__all__ = ["settings", "Settings"]
