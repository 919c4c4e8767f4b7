"""
ロギングなどの共通ユーティリティ。
"""

from .logging_config import DEFAULT_FORMAT, get_logger, setup_logging

__all__ = ["DEFAULT_FORMAT", "get_logger", "setup_logging"]
