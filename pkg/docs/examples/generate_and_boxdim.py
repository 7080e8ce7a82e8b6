import fractal_nets
from fractal_nets.analysis.boxcover import classify_fractality, nb_curve
from fractal_nets.analysis.metrics import metric_suite
from fractal_nets.experiments.emitters import emit_svg_loglog

# repulsion target of the RBFM
targets = [0.0, 0.5, 1.0]

curves = []
for Y in targets:
    g = fractal_nets.make('RBFM-v0', m=2, Y=Y, t=3, seed=0)
    curve = nb_curve(g, seed=0, n_orderings=3)
    report = classify_fractality(curve)
    print('Y=%.1f  %s  d_B=%.2f  r=%.3f' % (Y, report.label, report.d_b, metric_suite(g).assortativity))
    curves.append(curve)

emit_svg_loglog(curves, ['Y=%.1f' % Y for Y in targets], 'rbfm_curves.svg')
