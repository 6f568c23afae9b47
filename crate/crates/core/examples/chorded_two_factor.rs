//! Finds a chorded 2-factor through every edge of a random cubic plane graph.

use chordfactor::factors::two_factor_with_chord;
use chordfactor::oracle::random_triangulation;

fn main() -> chordfactor::Result<()> {
    let g = random_triangulation(20, 42).dual();
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let w = two_factor_with_chord(&g, e)?;
        w.validate(&g)?;
        let (u, v) = g.endpoints(e);
        println!("edge {u}-{v}: chord of a {}-cycle, {} cycles in total", w.factor.cycles()[w.cycle].len(), w.factor.cycle_count());
    }
    Ok(())
}
