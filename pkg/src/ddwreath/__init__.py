"""Useful pairs, wreath-product 2-designs and Delandtsheer-Doyen parameter checks."""

from .arith import PrimePower, binomial, factorial, is_prime_power, triangular_inverse
from .construction import build_design, certify, lambda_and_counts
from .ddcore import DDParams, Partition, dd_from_block, design_params
from .gf import Field, field_new
from .permgrp import GeneratorSet, Perm, orbitals, orbits
from .usefulpairs import NearMiss, UsefulPair, search, smallest_c

__version__ = "0.1.0"
