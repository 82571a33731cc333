"""Central registry for verification checks.

Imports concrete check classes directly to avoid pulling in the graph module.
"""

from typing import Dict, List, Type

from magnons.workflow.checks import (
    BaseCheck,
    ConcurrencePathsCheck,
    DensityOracleCheck,
    GraphStructureCheck,
    KostkaCheck,
    OrthonormalityCheck,
    RandomRobustnessCheck,
    RSBijectionCheck,
    RSInverseCheck,
    TableauxCountsCheck,
)


CHECK_REGISTRY: Dict[str, Type[BaseCheck]] = {
    # Combinatorics
    TableauxCountsCheck.name: TableauxCountsCheck,
    KostkaCheck.name: KostkaCheck,
    RSBijectionCheck.name: RSBijectionCheck,
    RSInverseCheck.name: RSInverseCheck,
    # States and densities
    OrthonormalityCheck.name: OrthonormalityCheck,
    DensityOracleCheck.name: DensityOracleCheck,
    # Entanglement
    ConcurrencePathsCheck.name: ConcurrencePathsCheck,
    GraphStructureCheck.name: GraphStructureCheck,
    RandomRobustnessCheck.name: RandomRobustnessCheck,
}

# Execution order of the verification graph
CHECK_ORDER: List[str] = list(CHECK_REGISTRY)
