//! Averaging the undersampled edges before sampling suppresses the artifact
//! of an oblique singularity at the cost of its own resolution.

use std::f64::consts::PI;

use tat_sampling::domain::{make_coherent_state, superpose_real, CovectorPoint, Edge, GeometrySpec, SpeedField};
use tat_sampling::experiment::metrics::disk_energy;
use tat_sampling::experiment::singularity_radius;
use tat_sampling::raytrace::{Medium, RayTracer};
use tat_sampling::recon::{antialias_pipeline, FilterSpec, PipelineOptions, Profile};
use tat_sampling::sampling::SamplingSpec;
use tat_sampling::wave::simulate_forward;

fn main() -> tat_sampling::error::Result<()> {
    let (h, k) = (0.005, 0.7);
    let g = GeometrySpec::new(0.8, 384).with_pad(0.12).with_margin(0.02).build()?;
    let c = SpeedField::constant(g.grid, 1.0)?;
    let a = 35f64.to_radians();
    let vertical = CovectorPoint::new([-0.33, 0.3], [0.0, k]);
    let oblique = CovectorPoint::new([0.25, -0.3], [k * a.cos(), k * a.sin()]);
    let f = superpose_real(&[
        make_coherent_state(vertical.x, vertical.xi, h, &g)?,
        make_coherent_state(oblique.x, oblique.xi, h, &g)?,
    ])?;
    let data = simulate_forward(&f, &c, 2.7, &g, h, 0.9)?;

    let native = g.square.spacing() / h;
    let coarse = PI / (0.4 * k);
    let mut s_y = [native; 4];
    s_y[Edge::Left.index()] = coarse;
    s_y[Edge::Right.index()] = coarse;
    let spec = SamplingSpec::per_edge(h, data.dt / h, s_y)?;
    let filt = FilterSpec::at_band_edge(0.0, 1.0, Profile::Gaussian, spec.s_t, coarse)?;
    let res = antialias_pipeline(&data, &spec, &filt, &c, &g, &PipelineOptions::default())?;
    let naive = res.naive.expect("naive reconstruction requested");

    let r = singularity_radius(h, g.dx());
    let tr = RayTracer::new(Medium::uniform(1.0)?, g.square);
    for p in tr.predict_all_artifacts(&oblique, &spec, 2)? {
        let x = p.image().expect("valid image").x;
        let (e_naive, e_avg) = (disk_energy(&naive, x, r, true), disk_energy(&res.averaged, x, r, true));
        println!("artifact at ({:.3}, {:.3}): energy {e_naive:.3e} naive, {e_avg:.3e} averaged", x[0], x[1]);
    }
    let e = |f| disk_energy(f, vertical.x, r, true);
    println!("vertical state energy: {:.3e} naive, {:.3e} averaged", e(&naive), e(&res.averaged));
    Ok(())
}
