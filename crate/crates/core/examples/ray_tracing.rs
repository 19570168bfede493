//! Rays through a fast bump: exit point, exit time and the boundary covector
//! of the canonical map, compared with the straight line through c = 1.

use tat_sampling::domain::{CovectorPoint, GaussianBump, SquareBoundary};
use tat_sampling::raytrace::{Branch, Medium, RayTracer};

fn main() -> tat_sampling::error::Result<()> {
    let square = SquareBoundary::new(-1.0, -1.0, 2.0, 256)?;
    let bump = GaussianBump {
        center: [0.2, 0.3],
        amplitude: 0.5,
        width: 0.02,
    };
    let curved = RayTracer::new(Medium::Bumps(vec![bump]), square);
    let straight = RayTracer::new(Medium::uniform(1.0)?, square);
    let start = CovectorPoint::new([0.0, -0.3], [0.0, 5.0]);
    for (name, tr) in [("c = 1", &straight), ("bump", &curved)] {
        for b in Branch::BOTH {
            let bc = tr.canonical_map(&start, b)?;
            println!(
                "{name:>6} {}: exits {} at ({:.4}, {:.4}) after t = {:.4}; tau = {:.3}, eta = {:.3}",
                b.symbol(),
                bc.edge.name(),
                bc.y[0],
                bc.y[1],
                bc.s,
                bc.tau,
                bc.eta
            );
        }
    }
    let path = curved.trace(&start, Branch::Plus)?;
    println!("bump ray: {} samples, Hamiltonian drift {:.2e}", path.samples.len(), path.max_drift);
    Ok(())
}
