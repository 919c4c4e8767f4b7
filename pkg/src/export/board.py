"""
占有状態のテキスト表示。
"""

from typing import Optional

from ..loading.occupancy import Occupancy
from ..models.data_models import GridSpec

FILLED = "●"
EMPTY = "○"


def render_board(occ: Occupancy, spec: Optional[GridSpec] = None) -> str:
    """
    1トラップ1文字で盤面を描く（'●' 充填、'○' 空）。

    ターゲットがグリッド全体でない場合、ターゲット領域の行を '[' と ']' で囲む。
    その他の行は同じ位置に空白を入れて列をそろえる。
    """
    bracket = spec is not None and spec.L < occ.width
    lo = spec.offset if spec is not None else 0
    hi = lo + spec.L if spec is not None else occ.width

    lines = []
    for r, row in enumerate(occ.filled):
        cells = [FILLED if v else EMPTY for v in row]
        if bracket:
            inside = lo <= r < hi
            cells.insert(hi, "]" if inside else " ")
            cells.insert(lo, "[" if inside else " ")
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)
