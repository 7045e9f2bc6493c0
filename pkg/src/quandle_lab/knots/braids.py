"""
Braid Words

Braids on m strands as words in the Artin generators, written as signed
integers: i stands for σ_i and -i for σ_i⁻¹. Includes the Markov moves
(conjugation and stabilization) and the strand permutation whose cycles
are the components of the closure.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from quandle_lab.exceptions import PresentationError


@dataclass(frozen=True)
class BraidWord:
    """Braid word on `strands` strands; letters are nonzero signed generator indices"""

    strands: int
    letters: Tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise PresentationError(f"A braid needs at least one strand, got {self.strands}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise PresentationError(
                    f"Generator {letter} is out of range for {self.strands} strands "
                    f"(expected ±1..±{self.strands - 1})"
                )

    @classmethod
    def parse(cls, text: str, strands: Optional[int] = None) -> "BraidWord":
        """
        Read "1 1 -2" or "1,1,-2"

        The strand count defaults to the largest generator index plus one.

        Raises:
            PresentationError: If a token is not a nonzero integer
        """
        tokens = text.replace(",", " ").split()
        try:
            letters = [int(token) for token in tokens]
        except ValueError:
            raise PresentationError(f"Malformed braid word '{text}'") from None
        return cls.from_letters(letters, strands)

    @classmethod
    def from_letters(cls, letters: Sequence[int], strands: Optional[int] = None) -> "BraidWord":
        if any(letter == 0 for letter in letters):
            raise PresentationError("Braid letters must be nonzero")
        inferred = max((abs(x) for x in letters), default=0) + 1
        return cls(strands if strands is not None else inferred, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        strands = max(self.strands, other.strands)
        return BraidWord(strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        """Every crossing switched"""
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        """by⁻¹ · self · by, a Markov conjugation"""
        return by.inverse() * self * by

    def stabilize(self, sign: int = 1) -> "BraidWord":
        """Append σ_m^{±1} on a new strand, a Markov stabilization"""
        if sign not in (1, -1):
            raise PresentationError("Stabilization sign must be +1 or -1")
        return BraidWord(self.strands + 1, self.letters + (sign * self.strands,))

    def permutation(self) -> Tuple[int, ...]:
        """perm[p] is the bottom position of the strand that starts at top position p"""
        position = list(range(self.strands))
        for letter in self.letters:
            i = abs(letter) - 1
            for strand, at in enumerate(position):
                if at == i:
                    position[strand] = i + 1
                elif at == i + 1:
                    position[strand] = i
        return tuple(position)

    def components(self) -> List[Tuple[int, ...]]:
        """Cycles of the permutation: the top positions belonging to each closure component"""
        perm = self.permutation()
        seen = set()
        cycles = []
        for start in range(self.strands):
            if start in seen:
                continue
            cycle = []
            p = start
            while p not in seen:
                seen.add(p)
                cycle.append(p)
                p = perm[p]
            cycles.append(tuple(cycle))
        return cycles

    def component_count(self) -> int:
        return len(self.components())

    def __str__(self) -> str:
        if not self.letters:
            return f"1 ({self.strands} strands)"
        return " ".join(str(x) for x in self.letters)


KNOTS: Dict[str, BraidWord] = {
    "3_1": BraidWord(2, (1, 1, 1)),
    "4_1": BraidWord(3, (1, -2, 1, -2)),
    "5_1": BraidWord(2, (1, 1, 1, 1, 1)),
    "5_2": BraidWord(3, (1, 1, 1, 2, -1, 2)),
    "hopf": BraidWord(2, (1, 1)),
    "torus_4_2": BraidWord(2, (1, 1, 1, 1)),
}


def resolve_braid(text: str, strands: Optional[int] = None) -> BraidWord:
    """
    Catalog name (3_1, 4_1, 5_1, 5_2, hopf, torus_4_2) or a signed-integer word

    Raises:
        PresentationError: For malformed words
    """
    key = text.strip()
    if key in KNOTS:
        braid = KNOTS[key]
        if strands is not None and strands != braid.strands:
            return BraidWord(strands, braid.letters)
        return braid
    return BraidWord.parse(key, strands)
