from fractal_nets.experiments.emitters import emit_csv, emit_svg_contour
from fractal_nets.experiments.replications import SweepSpec, sweep_grid
from fractal_nets.models import ModelSpec

sweep = SweepSpec(
    model=ModelSpec.from_params('rbfm', t=3),
    axes=[('m', [1, 2, 3]), ('Y', [0.0, 0.25, 0.5, 0.75, 1.0])],
    n_reps=10,
    master_seed=0,
)

if __name__ == '__main__':
    # seeds are fixed before dispatch, any number of jobs gives the same table
    table = sweep_grid(sweep, jobs=4)

    emit_csv(table, 'rbfm_sweep.csv')
    emit_svg_contour(table, 'assortativity', 'rbfm_assortativity.svg')
