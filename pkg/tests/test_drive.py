import io
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hddlogic import medium as med
from hddlogic.channel import TrainSpec, new_track, read_ideal, run_superimposition, write_pass
from hddlogic.detector import DetectMode
from hddlogic.drive import (AddStep, DriveGeometry, GateSpec, Head, VirtualDrive, dumps_track,
                            load_track, loads_track, parse_program, rotations_for_op, run_program,
                            save_track, throughput_bits_per_second)
from hddlogic.encode import Polarity, Word, to_pulse_train
from hddlogic.errors import (CellCountError, ImageVersionError, InvalidArgumentError,
                             MalformedImageError, ProgramError, TrackImageError)
from hddlogic.logic import Gate, LogicConfig, decode_track

LONG = med.LongitudinalMedium()


class TestCosts:
    @pytest.mark.parametrize("head, composed, expected", [
        (Head.STANDARD, False, 3), (Head.TANDEM, False, 1), (Head.STANDARD, True, 6),
        (Head.TANDEM, True, 2),
    ])
    def test_rotations(self, head, composed, expected):
        assert rotations_for_op(head, composed) == expected

    def test_throughput(self):
        assert throughput_bits_per_second(DriveGeometry(100, 10**6, Head.TANDEM)) == 10**8
        assert throughput_bits_per_second(DriveGeometry(100, 10**6, Head.STANDARD)) == Fraction(10**8, 3)
        assert throughput_bits_per_second(DriveGeometry(1, 1, Head.TANDEM)) == 1

    def test_geometry_validation(self):
        with pytest.raises(InvalidArgumentError):
            DriveGeometry(0, 10)
        with pytest.raises(InvalidArgumentError):
            DriveGeometry(1, -1)


class TestPrograms:
    def test_or_and_standard(self):
        drive = VirtualDrive(DriveGeometry(head=Head.STANDARD))
        steps = [GateSpec(Gate.OR, ("1010", "1001")), GateSpec(Gate.AND, ("1010", "1001"))]
        results, ledger = run_program(drive, steps)
        assert [str(r) for r in results] == ["1011", "1000"]
        assert ledger.rotations == 6 and ledger.operations == 2

    def test_empty(self):
        results, ledger = run_program(VirtualDrive(), [])
        assert results == [] and ledger.rotations == 0

    def test_adder_cost(self):
        drive = VirtualDrive(DriveGeometry(head=Head.STANDARD))
        results, ledger = run_program(drive, [AddStep("1111", "0001")])
        assert str(results[0]) == "10000"
        # 5 iterations x (XOR + AND) x 3 rotations
        assert ledger.rotations == 30

    def test_cost_additivity(self):
        drive = VirtualDrive(DriveGeometry(head=Head.STANDARD))
        steps = parse_program("or 10 01\nnand 11 01\nnot 1\nadd 11 01\n")
        _, ledger = run_program(drive, steps)
        assert ledger.rotations == sum(ledger.per_step)
        assert ledger.per_step[:3] == [3, 6, 3]

    def test_error_carries_step_index(self):
        # at pw50 = 1 neighbouring Lorentzians desynchronize dense 2M windows
        drive = VirtualDrive(config=LogicConfig(shaped=True, pw50=1.0))
        steps = [GateSpec(Gate.OR, ("10", "01")), GateSpec(Gate.AND, ("11", "11"))]
        with pytest.raises(ProgramError) as exc:
            run_program(drive, steps)
        assert exc.value.step == 1
        assert drive.ledger.operations == 1

    def test_parse_program(self):
        steps = parse_program("# comment\nOR 1010 1001\n\nnot 11  # trailing\nadd 1 1\n")
        assert isinstance(steps[0], GateSpec) and steps[0].gate is Gate.OR
        assert steps[1].gate is Gate.NOT and isinstance(steps[2], AddStep)
        for bad in ("frob 1 0", "or 1", "or 10 1", "add 1", "or 12 10"):
            with pytest.raises(InvalidArgumentError):
                parse_program(bad)

    def test_named_tracks_decode(self):
        drive = VirtualDrive()
        drive.execute(GateSpec(Gate.OR, ("1010", "1001")), name="t")
        assert str(drive.decode("t", DetectMode.LARGE_ONLY)) == "1000"


def fig2c_track():
    track, _ = run_superimposition(LONG, "1010", TrainSpec(), "1001", TrainSpec())
    return track


class TestTrackImage:
    def test_round_trip_fig2c(self, tmp_path):
        track = fig2c_track()
        path = tmp_path / "t.img"
        save_track(track, path)
        loaded = load_track(path)
        assert read_ideal(loaded).transitions.tolist() == read_ideal(track).transitions.tolist()
        assert loaded.g == 1 and loaded.pass_log == track.pass_log

    def test_header(self):
        text = dumps_track(fig2c_track())
        assert text.splitlines()[:4] == ["MAGTRACK 1", "g 1", "cells 10", "passes 2"]

    def test_truncated(self):
        text = dumps_track(fig2c_track())
        for cut in (5, len(text) // 2, len(text) - 5):
            with pytest.raises(MalformedImageError):
                loads_track(text[:cut])

    def test_wrong_version(self):
        text = dumps_track(fig2c_track()).replace("MAGTRACK 1", "MAGTRACK 2", 1)
        with pytest.raises(ImageVersionError):
            loads_track(text)

    def test_bad_magic(self):
        with pytest.raises(MalformedImageError):
            loads_track("NOTATRACK 1\n")

    def test_cell_count_mismatch(self):
        text = dumps_track(fig2c_track())
        with pytest.raises(CellCountError):
            loads_track(text.replace("cells 10", "cells 12"))
        with pytest.raises(CellCountError):
            loads_track(text.replace("cells 10", "cells 11"))
        with pytest.raises(CellCountError):
            loads_track(text.replace("\nend", "\n1\nend"))

    def test_error_classes_distinct(self):
        assert not issubclass(ImageVersionError, MalformedImageError)
        assert not issubclass(CellCountError, MalformedImageError)

    def test_loaded_track_is_read_only(self):
        loaded = loads_track(dumps_track(fig2c_track()))
        with pytest.raises(TrackImageError):
            write_pass(loaded, to_pulse_train("1010", amplitude=1.0))

    def test_file_objects(self):
        buf = io.StringIO()
        save_track(fig2c_track(), buf)
        buf.seek(0)
        assert load_track(buf).n_cells == 10

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 6).flatmap(lambda n: st.tuples(
        st.lists(st.sampled_from([0, 1]), min_size=n, max_size=n),
        st.lists(st.sampled_from([0, 1]), min_size=n, max_size=n))),
        st.integers(1, 3), st.sampled_from(list(Polarity)), st.floats(0.0, 0.999))
    def test_round_trip_any_track(self, pair, g, polarity, h2):
        a, b = (Word(tuple(x)) for x in pair)
        track = new_track(LONG, len(a), g)
        write_pass(track, to_pulse_train(a, Polarity.POSITIVE, g, 1.0))
        write_pass(track, to_pulse_train(b, polarity, g, h2))
        loaded = loads_track(dumps_track(track))
        assert loaded.cells.tobytes() == track.cells.tobytes()
        assert loaded.pass_log == track.pass_log

    def test_round_trip_monte_carlo(self):
        mc = med.LongitudinalMedium(mode=med.Mode.MONTE_CARLO, particles_per_cell=500, seed=1)
        track, _ = run_superimposition(mc, "1011", TrainSpec(), "0110", TrainSpec())
        loaded = loads_track(dumps_track(track))
        assert loaded.cells.tobytes() == track.cells.tobytes()
        for mode in DetectMode:
            assert decode_track(loaded, read_ideal(loaded), mode)[0] == \
                decode_track(track, read_ideal(track), mode)[0]
