from bruhat_orbits.core.types import CartanType
from bruhat_orbits.lie.lie_matrix import LieMatrix
from bruhat_orbits.lie.matrix_rep import lie_layout
from bruhat_orbits.ui.export import hasse_diagram, lie_matrix_rows, rank_matrix_csv, to_dot
from bruhat_orbits.weyl.bruhat_order import rank_matrix
from bruhat_orbits.weyl.root_system import RootSystem
from bruhat_orbits.weyl.signed_perm import SignedPermutation


def test_rank_matrix_csv_has_labels() -> None:
    matrix = rank_matrix(SignedPermutation((2, 1), CartanType.A))
    assert rank_matrix_csv(matrix) == ",1,2\n1,1,2\n2,1,1\n"


def test_signed_labels_in_csv_header() -> None:
    matrix = rank_matrix(SignedPermutation((1, 2), CartanType.C))
    assert rank_matrix_csv(matrix).splitlines()[0] == ",1,2,-2,-1"


def test_lie_matrix_rows() -> None:
    layout = lie_layout(RootSystem(CartanType.B, 1))
    rows = lie_matrix_rows(LieMatrix.identity(layout))
    assert rows["labels"] == [1, 0, -1]
    assert rows["rows"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]


def test_hasse_diagram_of_basis_involutions() -> None:
    graph = hasse_diagram(2, CartanType.C)

    assert graph.number_of_nodes() == 3
    assert graph.number_of_edges() == 2


def test_hasse_diagram_of_all_involutions_keeps_covers_only() -> None:
    graph = hasse_diagram(2, CartanType.C, basis_only=False)

    # dihedral order of length 8: two atoms, two coatoms, all crossing covers
    assert graph.number_of_nodes() == 6
    assert graph.number_of_edges() == 2 + 4 + 2


def test_dot_output() -> None:
    text = to_dot(hasse_diagram(2, CartanType.C))

    assert text.startswith("digraph bruhat {\n  rankdir=BT;\n")
    assert '  "1,2" -> "2,1";' in text
    assert '  "2,1" -> "-2,-1";' in text
    assert text.endswith("}\n")
