from dataclasses import dataclass, replace


@dataclass(frozen=True)
class VerifyConfig:
    """Bounds for a full verification run."""

    n_max: int = 12
    table_ns: tuple[int, ...] = (5, 6, 7)
    random_n: int = 8
    random_trials: int = 20  # 0 skips the random-symbol pass
    closed_form_n_max: int = 25
    genfun_order: int = 25
    zeros_n_max: int = 10
    r3_m_max: int = 13
    pattern_m_max: int = 3

    @classmethod
    def quick(cls, n_max: int = 6) -> "VerifyConfig":
        n = min(n_max, 6)
        return cls(n_max=n, table_ns=(5,), random_trials=0, closed_form_n_max=n, genfun_order=10, zeros_n_max=n)

    def with_n_max(self, n_max: int) -> "VerifyConfig":
        return replace(self, n_max=n_max)
