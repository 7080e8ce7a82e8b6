from fractal_nets.models.registration import register, make

# naming convention: ModelName-vN

# Growth models
register(
    id='SHM-v0',
    entry_point='fractal_nets.models.growth.shm:shm_generate',
    kind='shm',
)

register(
    id='RBFM-v0',
    entry_point='fractal_nets.models.growth.rbfm:rbfm_generate',
    kind='rbfm',
)

# Lattice models
register(
    id='LSwTM-v0',
    entry_point='fractal_nets.models.lattice.lswtm:lswtm_generate',
    kind='lswtm',
)
