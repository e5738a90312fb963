"""Type stubs for the nws_py extension module."""

from typing import Optional

class Instance:
    @staticmethod
    def parse(text: str) -> "Instance": ...
    @staticmethod
    def from_file(path: str) -> "Instance": ...
    @property
    def vertex_count(self) -> int: ...
    @property
    def edge_count(self) -> int: ...
    @property
    def community_count(self) -> int: ...
    @property
    def ell(self) -> int: ...
    @property
    def budget(self) -> str: ...
    @property
    def property(self) -> str: ...
    def edges(self) -> list[tuple[int, int, str]]: ...
    def communities(self) -> list[list[int]]: ...
    def feedback_edge_parameter(self) -> int: ...
    def hypergraph_component_count(self) -> int: ...
    def relevant_edge_count(self) -> int: ...
    def to_text(self) -> str: ...
    def with_budgets(self, ell: int, budget: str) -> "Instance": ...
    def verify(self, edges: list[tuple[int, int]]) -> dict: ...

class Solution:
    edges: list[tuple[int, int]]
    edge_count: int
    total_weight: str
    certificates: list[str]
    def to_text(self) -> str: ...

def solve(
    instance: Instance,
    algo: str = "auto",
    mode: str = "decide",
    cap: int = 24,
    timeout: Optional[float] = None,
) -> Optional[Solution]: ...
def auto_algorithm(instance: Instance) -> tuple[str, str]: ...
def random_instance(
    n: int,
    edge_prob: float,
    communities: int,
    size_range: tuple[int, int],
    weight_range: tuple[int, int],
    property: str,
    seed: int,
) -> Instance: ...
def hamiltonian_cycle_instance(n: int, edges: list[tuple[int, int]]) -> Instance: ...
def sat_stars_instance(dimacs: str) -> Instance: ...
