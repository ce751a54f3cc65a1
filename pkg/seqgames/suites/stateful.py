"""
Stateful objects built as anamorphisms agree with their direct descriptions.
"""

from typing import List, Sequence

from ..exceptions import SeqGamesError
from ..expr import GameExpr
from ..moves import format_position
from ..report import CheckResult
from ..stateful import (
    VarSpec,
    cell,
    check_write_read,
    combinatorial_cell,
    combinatorial_stack,
    stack,
)
from . import Diagram, GenericSuite

CONFIG_SCHEMA = dict(
    depth=dict(type="integer", min=1, nullable=True, default=8),
    stack_bound=dict(type="integer", min=0, default=2),
)

CELLS = (VarSpec(("0", "1"), "0"), VarSpec(("0", "1", "2"), "1"))
STACKS = (VarSpec(("0", "1"), "0"),)


class Suite(GenericSuite):
    """
    The cell and the bounded stack against their combinatorial versions, plus the
    read-after-write law for the cell.
    """

    NAME = "stateful"

    def run(
        self, corpus: Sequence[GameExpr], depth: int, workers: int = 1
    ) -> List[CheckResult]:
        depth = self.depth_for(depth)
        bound = self.config["stack_bound"]
        results: List[CheckResult] = []
        for spec in CELLS:
            label = "Var[%s] default %s" % (",".join(spec.values), spec.default)
            results.extend(
                self.check_diagrams(
                    label, [Diagram("cell", combinatorial_cell(spec), cell(spec))], depth
                )
            )
            try:
                broken = check_write_read(spec, cell(spec), depth)
            except SeqGamesError as exc:
                results.append(self.result("write then read", depth, label, False, str(exc)))
                continue
            detail = "" if broken is None else "wrong read at %s" % format_position(broken)
            results.append(self.result("write then read", depth, label, broken is None, detail))
        for spec in STACKS:
            label = "Stack[%s] bound %d" % (",".join(spec.values), bound)
            results.extend(
                self.check_diagrams(
                    label,
                    [Diagram("stack", combinatorial_stack(spec, bound), stack(spec, bound))],
                    depth,
                )
            )
        return results
