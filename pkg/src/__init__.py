"""
並列圧縮アルゴリズムによる原子配列再配置シミュレータ。
"""
