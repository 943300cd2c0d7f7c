"""Zero-divisor graphs of finite commutative rings and their L(2,1)-labellings."""

__version__ = "0.1.0"
