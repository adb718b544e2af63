//! Prime factorization of small graphs with respect to the Cartesian product.

use usp_graph::factor::{describe_factors, prime_factorize_small};
use usp_graph::fixtures;
use usp_graph::product::cartesian_product;

fn main() -> usp_graph::Result<()> {
    let graphs = [
        ("Q3", fixtures::q3()),
        ("prism", fixtures::prism().graph),
        ("M8", fixtures::m8().graph),
        ("P3 x C4 x K2", cartesian_product(&cartesian_product(&fixtures::path(3), &fixtures::c4()), &fixtures::k2())),
    ];
    for (name, g) in graphs {
        let f = prime_factorize_small(&g, 16)?;
        println!("{name}: {}", describe_factors(&f.factors));
        let back = f.product();
        assert_eq!((back.vertex_count(), back.edge_count()), (g.vertex_count(), g.edge_count()));
    }
    Ok(())
}
