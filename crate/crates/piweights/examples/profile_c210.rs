use piweights::*;
use std::time::Instant;

fn main() {
    let g = PermGroup::new(
        17,
        vec![Permutation::parse_cycles(17, "(1,2)(3,4,5)(6,7,8,9,10)(11,12,13,14,15,16,17)").unwrap()],
    )
    .unwrap();
    let pi = PiConfig::from_primes([2, 5]).unwrap();
    let mut wb = Workbench::new();
    let t = Instant::now();
    let cc = wb.classes(&g).unwrap();
    println!("classes ({}): {:?}", cc.len(), t.elapsed());
    let t = Instant::now();
    let table = wb.table(&g).unwrap();
    println!("table ({} rows): {:?}", table.len(), t.elapsed());
    let t = Instant::now();
    let data = wb.pi_partial_data(&g, &pi).unwrap();
    println!("ipi ({}): {:?}", data.irreducibles.len(), t.elapsed());
    let t = Instant::now();
    let subs = wb.subgroup_classes(&g).unwrap();
    println!("subgroups ({}): {:?}", subs.classes.len(), t.elapsed());
    let t = Instant::now();
    let vd = wb.vertex_data(&g, &pi).unwrap();
    println!("vertex_data ({} classes): {:?}", vd.pi_prime_classes.classes.len(), t.elapsed());
    let t = Instant::now();
    let rows = wb.per_q_rows(&g, &pi).unwrap();
    println!("per_q_rows ({}): {:?}", rows.len(), t.elapsed());
    let t = Instant::now();
    let c = wb.corollary_c_row(&g, &pi).unwrap();
    println!("corC (x_pi {}): {:?}", c.x_pi, t.elapsed());
    let t = Instant::now();
    let a = wb.awc_row(&g, &pi).unwrap();
    println!("awc ({:?}): {:?}", a.ok, t.elapsed());
}
