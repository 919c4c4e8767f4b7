"""
エラーハンドリングユーティリティ。
"""

import traceback
from functools import wraps
from typing import Callable, TypeVar

from ..utils import get_logger

# ロガーの設定
logger = get_logger(__name__)

T = TypeVar("T")


class PlanningError(Exception):
    """再配置計画の内部整合性エラー"""

    pass


class CollisionError(PlanningError):
    """経路が占有トラップに衝突した、または保持原子の状態が矛盾している"""

    pass


class ConfigError(ValueError):
    """実行設定が不正"""

    pass


def handle_planning_error(func: Callable[..., T]) -> Callable[..., T]:
    """
    計画処理のエラーをハンドリングするデコレータ。

    PlanningError はそのまま再送出し、それ以外の例外はログに記録した上で
    PlanningError に包んで送出する。

    Args:
        func: ラップする関数

    Returns:
        ラップされた関数
    """

    @wraps(func)
    def wrapper(*args, **kwargs) -> T:
        try:
            return func(*args, **kwargs)
        except PlanningError as e:
            log_error(e, func.__name__)
            raise
        except Exception as e:
            log_error(e, func.__name__)
            raise PlanningError(f"Planning failed in {func.__name__}: {e}") from e

    return wrapper


def log_error(error: Exception, context: str) -> None:
    """
    エラーをログに記録する。

    Args:
        error: エラーオブジェクト
        context: エラーが発生したコンテキスト
    """
    logger.error(f"Error in {context}: {str(error)}")
    logger.error(traceback.format_exc())
