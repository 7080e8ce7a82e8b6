from fractal_nets.models.model_spec import ModelSpec, CountPrediction, expected_counts_grid

# Growth models
from fractal_nets.models.growth.shm import shm_generate, expected_counts_shm
from fractal_nets.models.growth.rbfm import rbfm_generate, rbfm_rewire_prob, expected_counts_rbfm

# Lattice models
from fractal_nets.models.lattice.lswtm import lswtm_generate, lswtm_attach_weight
