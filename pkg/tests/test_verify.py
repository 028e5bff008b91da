import random
from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altpath.errors import BudgetExceeded
from altpath.geom import bounding_region, pt
from altpath.partition import Partition
from altpath.paths import AltPath, closed_cycle, solve_closed
from altpath.verify import brute_force_path, verify_partition, verify_path

from support import colored, instance


class TestVerifyPath:
    def test_ok(self):
        R, B = colored([(0, 2), (0, 0)], [(1, 1)])
        assert verify_path(R + B, AltPath((0, 2, 1))) is None

    def test_same_color(self):
        R, _ = colored([(0, 0), (1, 0)], [])
        assert verify_path(R, AltPath((0, 1))).kind == "NotAlternating"

    def test_crossing_square(self):
        R, B = colored([(0, 0), (1, 1)], [(1, 0), (0, 1)])
        assert verify_path(R + B, AltPath((0, 2, 1, 3), closed=True)) is None
        # same corners, colors swapped so the alternating cycle forms an X
        R, B = colored([(0, 0), (1, 0)], [(1, 1), (0, 1)])
        assert verify_path(R + B, AltPath((0, 2, 1, 3), closed=True)).kind == "Crossing"

    def test_missing_and_repeated(self):
        R, B = colored([(0, 2), (0, 0)], [(1, 1)])
        assert verify_path(R + B, AltPath((0, 2))).kind == "NotHamiltonian"
        assert verify_path(R + B, AltPath((0, 2, 0))).kind == "NotHamiltonian"
        assert verify_path(R + B, AltPath((0, 2, 7))).kind == "NotHamiltonian"

    def test_odd_cycle(self):
        R, B = colored([(0, 2), (0, 0)], [(1, 1)])
        assert verify_path(R + B, AltPath((0, 2, 1), closed=True)).kind == "NotAlternating"

    @given(st.integers(0, 10**6))
    def test_reversal_and_rotation(self, seed):
        inst = instance(seed, 4, 7, 3, 200)
        cycle = closed_cycle(inst)
        k = seed % len(cycle)
        assert verify_path(inst.points, AltPath(cycle.order[k:] + cycle.order[:k], True)) is None
        assert verify_path(inst.points, AltPath(tuple(reversed(cycle.order)), True)) is None
        rest = [p for p in inst.points if p.id != cycle.order[0]]
        assert verify_path(rest, AltPath(tuple(reversed(cycle.order[1:])))) is None


class TestVerifyPartition:
    def setup_method(self):
        self.inst = instance(21, 5, 9, 4)
        _, self.part = solve_closed(self.inst)
        self.box = bounding_region([p.point for p in self.inst.points])
        self.P = [p.point for p in self.inst.polygon_points]
        self.args = (self.box, self.P, self.inst.outer_red, list(self.inst.blue))

    def test_ok(self):
        assert verify_partition(*self.args, self.part, [1] * 5) is None

    def test_moved_point(self):
        pid = next(iter(self.part.assignment))
        moved = dict(self.part.assignment)
        moved[pid] = (moved[pid] + 1) % 5
        report = verify_partition(*self.args, Partition(self.part.regions, moved), [1] * 5)
        assert report.kind in ("BadDiscrepancy", "CoverageGap")

    def test_dropped_region(self):
        part = Partition(self.part.regions[:-1], self.part.assignment)
        assert verify_partition(*self.args, part, [1] * 5).kind == "CoverageGap"
        assert verify_partition(*self.args, part, [1] * 4).kind == "CoverageGap"

    def test_overlap(self):
        regions = list(self.part.regions)
        regions[1] = regions[0]
        report = verify_partition(*self.args, Partition(tuple(regions), self.part.assignment), [1] * 5)
        assert report.kind in ("CoverageGap", "Overlap")

    def test_wrong_target(self):
        report = verify_partition(*self.args, self.part, [2, 0, 1, 1, 1])
        assert report.kind == "BadDiscrepancy"

    def test_unassigned(self):
        assignment = dict(self.part.assignment)
        assignment.pop(next(iter(assignment)))
        report = verify_partition(*self.args, Partition(self.part.regions, assignment), [1] * 5)
        assert report.kind == "CoverageGap"


class TestBruteForce:
    def test_two_points(self):
        R, B = colored([(0, 0)], [(1, 0)])
        assert brute_force_path(R, B, False).order in ((0, 1), (1, 0))

    def test_octagon(self):
        import math

        ring = [(round(100 * math.cos(k * math.pi / 4)), round(100 * math.sin(k * math.pi / 4))) for k in range(8)]
        R, B = colored(ring[0::2], ring[1::2])
        path = brute_force_path(R, B, True)
        assert path is not None and verify_path(R + B, path) is None

    def test_no_cycle(self):
        assert brute_force_path(*colored([(0, 0)], [(1, 0)]), True) is None
        # square with the reds adjacent: both alternating 4-cycles cross
        R, B = colored([(0, 0), (1, 0)], [(1, 1), (0, 1)])
        assert brute_force_path(R, B, True) is None
        assert brute_force_path(R, B, False) is not None

    def test_budget(self):
        R, B = colored([(i, i * i) for i in range(7)], [(i, -i * i - 1) for i in range(6)])
        with pytest.raises(BudgetExceeded):
            brute_force_path(R, B, False)

    def test_endpoints(self):
        R, B = colored([(0, 2), (0, 0)], [(1, 1)])
        assert brute_force_path(R, B, False, (1, 0)).order == (1, 2, 0)

    @given(st.integers(0, 10**6))
    def test_results_verify(self, seed):
        rng = random.Random(seed)
        s = 3
        n_red = rng.randint(0, 1)
        inst = instance(seed, s, s + n_red, n_red, 100)
        path = brute_force_path(list(inst.red), list(inst.blue), True)
        assert path is not None
        assert verify_path(inst.points, path) is None
