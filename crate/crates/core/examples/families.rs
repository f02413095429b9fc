//! A tour of the built-in families: how the top-dimensional Cheeger
//! numbers and spectral gaps move apart in both directions, and how
//! torsion decouples them entirely.

use scx_core::*;

fn rat(r: Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn main() -> Result<()> {
    let caps = Caps::default();

    println!("iterated gluing family (m = 2): h^1 -> 0 while lambda^1 stays above 1/6");
    println!("{:>3} {:>8} {:>8} {:>12} {:>12}", "k", "facets", "radius", "h^1", "lambda^1");
    for k in 1..=5 {
        let x = generators::xk(2, k);
        let h = structural_cheeger(&x, StructuralTarget::TopCochainViaRadius, &caps)?;
        let lam = spectral_gap(&x, 1, GapDirection::Up, false, DEFAULT_EIG_TOL)?.unwrap();
        println!(
            "{:>3} {:>8} {:>8} {:>12} {:>12.6}",
            k,
            x.count(2),
            h.denominator,
            rat(h.value),
            lam
        );
    }

    println!();
    println!("iterated stellar family (m = 2): lambda^1 -> 0 while h^1 >= 1/k");
    println!("{:>3} {:>8} {:>8} {:>12} {:>12}", "k", "facets", "radius", "h^1", "lambda^1");
    for k in 1..=4 {
        let y = generators::yk(2, k);
        let h = structural_cheeger(&y, StructuralTarget::TopCochainViaRadius, &caps)?;
        let lam = spectral_gap(&y, 1, GapDirection::Up, false, DEFAULT_EIG_TOL)?.unwrap();
        println!(
            "{:>3} {:>8} {:>8} {:>12} {:>12.6}",
            k,
            y.count(2),
            h.denominator,
            rat(h.value),
            lam
        );
    }

    println!();
    println!("projective plane: torsion separates the Z2 and rational worlds");
    let x = generators::rp2();
    let h2 = cheeger(&x, 2, Direction::Boundary, false, &caps)?;
    let lam2 = spectral_gap(&x, 2, GapDirection::Down, false, DEFAULT_EIG_TOL)?.unwrap();
    let torsion = smith_normal_form(&signed_boundary(&x, 2, false)?).torsion();
    println!(
        "  betti_Z2 = {:?}, betti_Q = {:?}",
        (0..3)
            .map(|k| betti(&x, k, Field::Z2, false).unwrap())
            .collect::<Vec<_>>(),
        (0..3)
            .map(|k| betti(&x, k, Field::Rational, false).unwrap())
            .collect::<Vec<_>>(),
    );
    println!(
        "  torsion of H_1(Z): {:?}",
        torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>()
    );
    println!(
        "  h_2 = {} (witness weight {}), lambda_2 = {:.6}",
        rat(h2.value().unwrap()),
        h2.certificate().unwrap().witness.weight(),
        lam2
    );

    println!();
    println!("double-star graphs: the reduced graph Cheeger constant collapses");
    println!("{:>3} {:>10} {:>8} {:>12}", "k", "h^0 (red)", "h_1", "lambda^0");
    for k in 1..=6 {
        let g = generators::gk(k);
        let h0 = cheeger(&g, 0, Direction::Coboundary, true, &caps)?;
        let h1 = cheeger(&g, 1, Direction::Boundary, false, &caps)?;
        let lam = spectral_gap(&g, 0, GapDirection::Up, true, DEFAULT_EIG_TOL)?.unwrap();
        println!(
            "{:>3} {:>10} {:>8} {:>12.6}",
            k,
            rat(h0.value().unwrap()),
            rat(h1.value().unwrap()),
            lam
        );
    }
    Ok(())
}
