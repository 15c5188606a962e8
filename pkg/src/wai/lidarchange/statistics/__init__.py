from ._functions import lower_quartile, upper_quartile, interquartile_range, mean_and_std
