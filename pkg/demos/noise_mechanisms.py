"""Draw calibrated noise and check it against the analytic densities."""

import numpy as np

from dppost import (NoiseFamily, NoiseSpec, RngStream, geometric_pmf,
                    laplace_pdf, sample_vector)

if __name__ == "__main__":
    # a sum query over one person's data changes by at most 1, so at
    # epsilon = 0.5 the mechanism adds Laplace(scale=2) noise
    spec = NoiseSpec.from_privacy(NoiseFamily.LAPLACE, sensitivity=1.0, epsilon=0.5)
    print("laplace scale from (sensitivity=1, epsilon=0.5):", spec.scale)

    draws = sample_vector(spec, 200_000, RngStream(master_seed=0, stream_index=0))
    print("empirical mean %.4f (expect 0)" % draws.mean())
    print("empirical var  %.4f (expect %.1f)" % (draws.var(), spec.variance()))

    # histogram mass against the density
    edges = np.linspace(-8, 8, 33)
    counts, _ = np.histogram(draws, bins=edges)
    mids = 0.5 * (edges[:-1] + edges[1:])
    model = laplace_pdf(mids, spec.scale) * (edges[1] - edges[0]) * draws.size
    print("worst relative bin error vs pdf: %.3f"
          % np.max(np.abs(counts - model) / model))

    # integer-valued counterpart: same epsilon, draws stay on the lattice
    geo = NoiseSpec.from_privacy(NoiseFamily.TWO_SIDED_GEOMETRIC,
                                 sensitivity=1.0, epsilon=0.5)
    kdraws = sample_vector(geo, 200_000, RngStream(0, 1))
    assert np.array_equal(kdraws, np.round(kdraws))
    print("\ngeometric ratio a = exp(-epsilon):", geo.scale)
    ks = np.arange(-6, 7)
    freq = np.array([(kdraws == k).mean() for k in ks])
    pmf = geometric_pmf(ks, geo.scale)
    for k, f, p in zip(ks, freq, pmf):
        print("  k=%+d  freq %.4f  pmf %.4f" % (k, f, p))
