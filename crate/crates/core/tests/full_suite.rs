use lie_index_core::verify::{check_all, summarize};
use lie_index_core::{CheckOptions, IdentityId, SimpleType};

#[test]
fn every_identity_holds_up_to_rank_eight() {
    let start = std::time::Instant::now();
    let types = SimpleType::all_up_to(8);
    let results = check_all(&types, &IdentityId::ALL, &CheckOptions::default()).unwrap();
    let (passed, failed, skipped) = summarize(&results);
    let mut slow: Vec<_> = results.iter().collect();
    slow.sort_by_key(|r| std::cmp::Reverse(r.elapsed));
    for r in slow.iter().take(8) {
        eprintln!(
            "{} {} {:?} {:?}",
            r.identity, r.simple_type, r.weight, r.elapsed
        );
    }
    for r in results.iter().filter(|r| r.failed()) {
        eprintln!("FAILED {r:?}");
    }
    eprintln!(
        "{passed} passed, {failed} failed, {skipped} skipped in {:?}",
        start.elapsed()
    );
    assert_eq!(failed, 0);
}
