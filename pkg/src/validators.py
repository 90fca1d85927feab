"""Verification results and root-system table validation"""

from typing import Dict, List, Optional, Sequence

from src.root_system import RootSystem

# Known positive-root counts per type label
KNOWN_ROOT_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "C3": 9, "G2": 6}

# Counterexamples kept verbatim in a result; the count keeps growing past this
MAX_STORED_COUNTEREXAMPLES = 50


class VerificationResult:
    """Container for the outcome of one exhaustive check"""

    def __init__(self, theorem: str, **scope):
        self.theorem = theorem
        self.scope: Dict[str, object] = dict(scope)
        self.counterexamples: List[dict] = []
        self.counterexample_count = 0
        self.checked: Dict[str, int] = {}
        self.details: Dict[str, object] = {}
        self.notes: List[str] = []

    @property
    def success(self) -> bool:
        return self.counterexample_count == 0

    def add_counterexample(self, message: str, **data):
        """Record a failure; only the first MAX_STORED_COUNTEREXAMPLES are kept in full"""
        self.counterexample_count += 1
        if len(self.counterexamples) < MAX_STORED_COUNTEREXAMPLES:
            self.counterexamples.append({"message": message, **data})

    def count(self, what: str, amount: int = 1):
        self.checked[what] = self.checked.get(what, 0) + amount

    def add_note(self, message: str):
        self.notes.append(message)

    def messages(self) -> List[str]:
        return [c["message"] for c in self.counterexamples]

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {
            "theorem": self.theorem,
            "scope": self.scope,
            "success": self.success,
            "counterexample_count": self.counterexample_count,
            "counterexamples": self.counterexamples,
            "checked": self.checked,
            "details": self.details,
            "notes": self.notes,
        }


def validate_root_system(rs: RootSystem, listed_roots: Optional[Sequence[Sequence[int]]] = None) -> VerificationResult:
    """
    Check the structural invariants of a root system built from a table

    Args:
        rs: Root system built from the Cartan matrix
        listed_roots: Positive roots as listed in the table document, if any

    Returns:
        VerificationResult: One counterexample per violated invariant
    """
    result = VerificationResult("root-system-table", type=rs.type_label)
    roots = rs.positive_roots

    expected = KNOWN_ROOT_COUNTS.get(rs.type_label)
    if expected is not None and len(roots) != expected:
        result.add_counterexample(f"{len(roots)} positive roots, expected {expected}")

    if listed_roots is not None:
        listed = {tuple(r) for r in listed_roots}
        computed = {r.coeffs for r in roots}
        if listed != computed:
            result.add_counterexample(
                "listed positive roots differ from the reflection closure",
                missing=sorted(computed - listed),
                extra=sorted(listed - computed),
            )

    for root in roots:
        if not (all(c >= 0 for c in root.coeffs) and any(root.coeffs)):
            result.add_counterexample(f"{root} is not a positive coefficient vector")
        for i in range(1, rs.rank + 1):
            image = rs.reflect_root(i, root)
            if not rs.is_root(image):
                result.add_counterexample(f"s{i}({root}) = {image} is not a root")
            elif not image.is_positive and image != -rs.simple_root(i):
                result.add_counterexample(f"s{i} sends {root} to the negative root {image}")
        result.count("roots")

    if rs.highest_root.height != rs.coxeter_number - 1:
        result.add_counterexample("height of the highest root is not h - 1")
    return result
