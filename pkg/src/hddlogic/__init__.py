"""Simulated hard-disk track used as a magnetomechanical logic device."""
from ._backend import BACKEND
from .channel import (ReadbackSignal, Track, TrainSpec, new_track, read_ideal, read_shaped,
                      run_superimposition, write_pass)
from .detector import (DetectMode, DetectorConfig, PeakClass, PeakEvent, decode_word,
                       detect_peaks, window_flags)
from .drive import (AddStep, CostLedger, DriveGeometry, GateSpec, Head, VirtualDrive,
                    load_track, rotations_for_op, run_program, save_track,
                    throughput_bits_per_second)
from .encode import (Polarity, PulseTrain, Word, double_bits, to_pulse_train, undouble_bits,
                     window_boundaries)
from .logic import (Gate, LogicConfig, add, adder, boolean_oracle, gate_and, gate_composed,
                    gate_not, gate_or, gate_xor, gate_xor_neg, left_shift, run_gate)
from .medium import (LongitudinalMedium, Mode, ParticleEnsemble, PerpendicularMedium,
                     analytic_cell_write, apply_field, balanced_field, net_magnetization,
                     perpendicular_apply_field, remanence_after_opposed, sample_ensemble,
                     threshold_angle)

__version__ = "0.1.0"
