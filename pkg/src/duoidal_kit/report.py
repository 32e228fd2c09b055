"""Check reports shared by all axiom checkers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckItem:
    name: str
    passed: bool
    scope: str = ""
    witness: str = ""

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name}"
        if self.scope:
            line += f"  [{self.scope}]"
        if self.witness and not self.passed:
            line += f"  witness: {self.witness}"
        return line


@dataclass
class CheckReport:
    title: str
    items: list[CheckItem] = field(default_factory=list)

    def add(self, name: str, passed: bool, scope: str = "", witness: str = "") -> None:
        self.items.append(CheckItem(name, passed, scope, witness))

    @property
    def all_passed(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> list[CheckItem]:
        return [item for item in self.items if not item.passed]

    def render(self) -> str:
        lines = [f"== {self.title} =="]
        lines.extend(item.render() for item in self.items)
        verdict = "ALL PASS" if self.all_passed else "FAILURES PRESENT"
        lines.append(f"-- {verdict} ({len(self.items)} checks)")
        return "\n".join(lines)


def skey(x):
    """Total deterministic sort key over the mixed values used as elements."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (1, x)
    if isinstance(x, str):
        return (2, x)
    if isinstance(x, tuple):
        return (3, len(x), tuple(skey(v) for v in x))
    if isinstance(x, frozenset):
        return (4, len(x), tuple(sorted(skey(v) for v in x)))
    if hasattr(x, "sort_key"):
        return (5, x.sort_key())
    return (6, repr(x))


def sorted_elements(xs):
    return sorted(xs, key=skey)
