import argparse

from steklov_orb.config import InversePrefixConfig, LensSweepConfig, add_arguments, from_args


def parse(cls, argv):
    ap = argparse.ArgumentParser()
    add_arguments(ap, cls)
    return from_args(cls, ap.parse_args(argv))


def test_defaults():
    assert parse(LensSweepConfig, []) == LensSweepConfig()


def test_flags():
    cfg = parse(LensSweepConfig, ["--m", "3", "--family", "--no-check", "--check-qmax", "50"])
    assert (cfg.m, cfg.family, cfg.check, cfg.check_qmax) == (3, True, False, 50)
    assert parse(InversePrefixConfig, ["--trials", "7"]).trials == 7
