"""
再現性のある乱数生成器。

SplitMix64 をカウンタベースで使う: i 番目の出力は mix(seed + (i+1)·γ)。
numpy の uint64 演算はラップアラウンドするため、どのプラットフォームでも
同じ seed から同じビット列が得られる。
"""

import numpy as np

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1
_TO_UNIT = 1.0 / float(1 << 53)


def splitmix64(state: np.ndarray) -> np.ndarray:
    """SplitMix64 の出力関数（配列に対してベクトル化）。"""
    z = state
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


class CounterRNG:
    """seed とカウンタだけで状態が決まる乱数生成器。"""

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64
        self.counter = 0

    def next_u64(self, n: int) -> np.ndarray:
        """次の n 個の 64 ビット整数を返す。"""
        idx = np.arange(self.counter + 1, self.counter + n + 1, dtype=np.uint64)
        self.counter += n
        return splitmix64(np.uint64(self.seed) + idx * _GAMMA)

    def uniform(self, n: int) -> np.ndarray:
        """[0, 1) の一様乱数（53ビット精度）。"""
        return (self.next_u64(n) >> np.uint64(11)).astype(np.float64) * _TO_UNIT

    def bernoulli(self, p: float, shape) -> np.ndarray:
        """確率 p で True となる真偽値配列（行優先で乱数を割り当てる）。"""
        n = int(np.prod(shape))
        return (self.uniform(n) < p).reshape(shape)
