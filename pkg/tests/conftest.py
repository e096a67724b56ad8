import pytest

from exobalance import ExoModel, MassSet, SpringPair, balanced_model

# Average-arm reference setup: upper-arm link carries the 3.6 kg arm on top
# of its own 1 kg (m1 = 4.6), forearm link 1 kg, shoulder link 0.30 m.
REF_L1 = 0.30
REF_MASSES = MassSet(m1=4.6, m2=1.0)

# Closed-form stiffnesses and energy constant for the reference setup:
#   k1 = (81 g / (8 l1)) (m1/2 + m2)          = 874071/800 N/m
#   k2 = g (m2 l2 / 2) / (l5 ls)              = 2943/175 N/m
#   V  = (10/81) k1 l1^2 + (1/2) k2 (l5^2+ls^2) = 30186351/2240000 J
REF_K1 = 1092.58875
REF_K2 = 16.81714285714286
REF_V = 13.476049553571428


@pytest.fixture(scope="session")
def reference_model() -> ExoModel:
    return balanced_model(REF_MASSES, l1=REF_L1)


@pytest.fixture(scope="session")
def spring_free_model(reference_model: ExoModel) -> ExoModel:
    return ExoModel(
        arch=reference_model.arch,
        masses=reference_model.masses,
        springs=SpringPair(),
        g=reference_model.g,
    )
