"""Classification of minimal double planes (F x C)/G with p_g = 0 and K^2 = 8."""

__version__ = "0.1.0"
