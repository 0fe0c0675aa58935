import pytest

from insetedge import (
    Tree,
    anatomize,
    bfs_distances,
    leaves,
    parse_tree,
    path_between,
    serialize_tree,
)
from insetedge.errors import (
    AdjacentPair,
    DuplicateEdge,
    IdOutOfRange,
    MalformedLine,
    NotATree,
    SameVertex,
)

from conftest import path_tree, star_tree


class TestParse:
    def test_path4(self, p4):
        t = parse_tree("4\n0 1\n1 2\n2 3\n")
        assert t.n == 4
        assert t.edges == p4.edges

    def test_star4(self, s4):
        t = parse_tree("4\n0 1\n0 2\n0 3\n")
        assert t.edges == s4.edges

    def test_three_edges_on_three_vertices(self):
        with pytest.raises(NotATree):
            parse_tree("3\n0 1\n1 2\n2 0\n")

    def test_comments_blanks_crlf(self):
        t = parse_tree("# a comment\r\n3\r\n\r\n0 1\r\n# more\r\n1 2\r\n")
        assert t.n == 3
        assert t.edges == ((0, 1), (1, 2))

    def test_malformed_header(self):
        with pytest.raises(MalformedLine):
            parse_tree("x\n0 1\n")

    def test_malformed_edge_line(self):
        with pytest.raises(MalformedLine):
            parse_tree("3\n0 1\n1 2 3\n")

    def test_empty_document(self):
        with pytest.raises(MalformedLine):
            parse_tree("\n# only comments\n")

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            parse_tree("4\n0 1\n1 0\n2 3\n")

    def test_id_out_of_range(self):
        with pytest.raises(IdOutOfRange):
            parse_tree("3\n0 1\n1 7\n")

    def test_disconnected(self):
        # 3 edges on 4 vertices, but vertex 0 is isolated (cycle on 1,2,3)
        with pytest.raises(NotATree):
            parse_tree("4\n1 2\n2 3\n1 3\n")

    def test_self_loop(self):
        with pytest.raises(NotATree):
            parse_tree("2\n1 1\n")

    def test_roundtrip(self, spider):
        assert parse_tree(serialize_tree(spider)).edges == spider.edges

    def test_serialize_canonical(self):
        t = Tree.from_edges(3, [(2, 1), (1, 0)])
        assert serialize_tree(t) == "3\n0 1\n1 2\n"


class TestDistances:
    def test_path(self, p4):
        assert bfs_distances(p4, 0) == [0, 1, 2, 3]

    def test_star_center(self, s4):
        assert bfs_distances(s4, 0) == [0, 1, 1, 1]

    def test_spider(self, spider):
        assert bfs_distances(spider, 3) == [3, 2, 1, 0, 4]

    def test_bad_source(self, p4):
        with pytest.raises(IdOutOfRange):
            bfs_distances(p4, 9)


class TestPathBetween:
    def test_whole_path(self, p4):
        assert path_between(p4, 0, 3) == [0, 1, 2, 3]

    def test_via_center(self, s4):
        assert path_between(s4, 1, 2) == [1, 0, 2]

    def test_adjacent(self, p4):
        assert path_between(p4, 1, 2) == [1, 2]

    def test_same_vertex(self, p4):
        with pytest.raises(SameVertex):
            path_between(p4, 2, 2)


class TestAnatomize:
    def test_path_ends(self, p4):
        a = anatomize(p4, 0, 3)
        assert (a.k, a.k_prime) == (4, 2)
        assert a.x_side == (0, 1) and a.y_side == (3, 2)
        assert a.weights_x == (1, 1) and a.weights_y == (1, 1)
        assert a.middle is None and a.weight_middle is None

    def test_star_leaves(self, s5):
        a = anatomize(s5, 1, 2)
        assert a.k == 3
        assert a.x_side == (1,) and a.y_side == (2,)
        assert a.middle == 0 and a.weight_middle == 3
        assert a.weights_x == (1,) and a.weights_y == (1,)

    def test_spider(self, spider):
        a = anatomize(spider, 0, 3)
        assert a.k == 4
        assert a.weights_x == (2, 1) and a.weights_y == (1, 1)

    def test_weights_sum_to_n(self, spider, p7):
        for t, (x, y) in ((spider, (0, 3)), (p7, (0, 6)), (p7, (1, 4))):
            a = anatomize(t, x, y)
            total = sum(a.weights_x) + sum(a.weights_y) + (a.weight_middle or 0)
            assert total == t.n

    def test_adjacent_pair(self, p4):
        with pytest.raises(AdjacentPair):
            anatomize(p4, 1, 2)

    def test_distance_indexing(self, p7):
        # d(x_i, y_j) = k + 1 - i - j with 1-based cycle positions
        a = anatomize(p7, 0, 6)
        dist = bfs_distances(p7, 0)
        for i, u in enumerate(a.x_side, start=1):
            for j, v in enumerate(a.y_side, start=1):
                d = abs(dist[u] - dist[v])
                assert d == a.k + 1 - i - j


class TestLeaves:
    def test_path(self, p4):
        assert leaves(p4) == {0, 3}

    def test_star(self, s4):
        assert leaves(s4) == {1, 2, 3}

    def test_spider(self, spider):
        assert leaves(spider) == {3, 4}

    def test_random_degree_check(self):
        t = star_tree(9)
        assert leaves(t) == set(range(1, 9))
        t = path_tree(2)
        assert leaves(t) == {0, 1}
