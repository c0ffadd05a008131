from enum import Enum


class RankingCriterion(Enum):
    MUTUAL_INFORMATION = 'mi'
    HOMOGENEITY = 'homogeneity'

    @classmethod
    def from_name(cls, name: str) -> 'RankingCriterion':
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(
                f'Unknown ranking criterion "{name}", expected one of '
                + ', '.join(c.value for c in cls),
            )

    def __repr__(self):
        return f'{self.__class__.__name__}.{self.name}'
