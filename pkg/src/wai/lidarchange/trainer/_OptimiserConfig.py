from typing import Iterable, Tuple

import torch


class OptimiserConfig:
    """
    Settings of the Adam optimiser.
    """
    def __init__(self,
                 learning_rate: float = 1e-3,
                 betas: Tuple[float, float] = (0.9, 0.999),
                 eps: float = 1e-8):
        if learning_rate < 0.0:
            raise ValueError(f"Learning rate must be non-negative, got {learning_rate}")

        if len(betas) != 2 or not all(0.0 <= beta < 1.0 for beta in betas):
            raise ValueError(f"Betas must be two values in [0, 1), got {betas}")

        if not eps > 0.0:
            raise ValueError(f"eps must be positive, got {eps}")

        self.learning_rate: float = float(learning_rate)
        self.betas: Tuple[float, float] = (float(betas[0]), float(betas[1]))
        self.eps: float = float(eps)

    def scaled(self, factor: float) -> "OptimiserConfig":
        """
        Gets a copy with the learning rate multiplied by a factor.
        """
        if not factor > 0.0:
            raise ValueError(f"Learning-rate scale must be positive, got {factor}")

        return OptimiserConfig(self.learning_rate * factor, self.betas, self.eps)

    def create(self, parameters: Iterable[torch.nn.Parameter]) -> torch.optim.Optimizer:
        return torch.optim.Adam(parameters, lr=self.learning_rate, betas=self.betas, eps=self.eps)

    def __repr__(self):
        return f"OptimiserConfig(learning_rate={self.learning_rate}, betas={self.betas}, eps={self.eps})"
