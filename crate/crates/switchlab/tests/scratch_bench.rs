mod common;
use common::*;
use std::time::Instant;
use switchlab::explore::Filter;
use switchlab::transition::forest_transition;

#[test]
#[ignore]
fn attribution() {
    // Independent pseudoforest count on n=7 by raw mask iteration.
    let slots = edge_slots(7);
    let mut count = 0u64;
    for bits in 0u32..(1 << slots.len()) {
        if graph_from_bits(7, &slots, bits).is_pseudoforest() { count += 1; }
    }
    println!("pseudoforest count by masks: {count}");
    println!("pseudoforest count by search: {}", filtered_masks(7, Filter::Pseudoforest).len());

    let d = switchlab::degree_expr::parse_degree_expression("2^6,1^2").unwrap();
    let class = switchlab::explore::enumerate_realizations(&d, Filter::Forest).unwrap();
    let t = Instant::now();
    let mut total_len = 0usize;
    for a in class.iter().take(100) { for b in &class {
        let seq = forest_transition(a, b).unwrap();
        total_len += seq.len();
    }}
    let secs = t.elapsed();
    println!("transitions {} pairs in {:?} ({:.2}us/pair), total len {}",
             100*class.len(), secs, secs.as_secs_f64()*1e6/(100*class.len()) as f64, total_len);
}
