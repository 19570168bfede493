//! Predicted aliasing artifacts of one covector under time undersampling and
//! under arc undersampling of the right edge.

use std::f64::consts::PI;

use tat_sampling::domain::{CovectorPoint, Edge, SquareBoundary};
use tat_sampling::raytrace::{ArtifactOutcome, Medium, RayTracer};
use tat_sampling::sampling::SamplingSpec;

fn main() -> tat_sampling::error::Result<()> {
    let h = 0.01;
    let square = SquareBoundary::new(-0.8, -0.8, 1.6, 512)?;
    let tracer = RayTracer::new(Medium::uniform(1.0)?, square);
    let native = square.spacing() / h;

    let a = 10f64.to_radians();
    let source = CovectorPoint::new([0.0, 0.12], [a.sin(), a.cos()]);
    let t_spec = SamplingSpec::new(h, PI / 0.75, native)?;
    report("time", &tracer, &source, &t_spec)?;

    let b = 35f64.to_radians();
    let source = CovectorPoint::new([0.25, -0.3], [0.7 * b.cos(), 0.7 * b.sin()]);
    let mut s_y = [native; 4];
    s_y[Edge::Right.index()] = PI / 0.28;
    let y_spec = SamplingSpec::per_edge(h, 0.2, s_y)?;
    report("right edge", &tracer, &source, &y_spec)
}

fn report(what: &str, tr: &RayTracer, src: &CovectorPoint, spec: &SamplingSpec) -> tat_sampling::error::Result<()> {
    println!("{what} undersampling of x = {:?}, xi = {:?}", src.x, src.xi);
    let all = tr.enumerate_artifacts(src, spec, 2)?;
    let mut rejected = 0;
    for p in &all {
        match &p.outcome {
            ArtifactOutcome::Image(img) => println!(
                "  k = {:+} branch {}: image at ({:.4}, {:.4}) with xi = ({:.4}, {:.4})",
                p.k,
                p.branch.symbol(),
                img.x[0],
                img.x[1],
                img.xi[0],
                img.xi[1]
            ),
            ArtifactOutcome::Invalid(_) => rejected += 1,
            ArtifactOutcome::NoArtifact => {}
        }
    }
    println!("  {rejected} of {} shifts leave the band or the domain", all.len());
    Ok(())
}
