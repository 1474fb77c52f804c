use superybe::format::parse;
use superybe::Error;

const AFFINE: &str = "\
# the 1|1 algebra with [e, f] = f
[space]
even = e
odd = f

[bracket]
e f = 1 f

[map T0 : g* -> g parity even]
e* = 0
f* = 1 f

[tensor r1 parity odd]
e f = 1
f e = 1
";

fn parse_error_line(text: &str) -> usize {
    match parse(text) {
        Err(Error::Parse { line, .. }) => line,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn reads_maps_and_tensors() {
    let doc = parse(AFFINE).unwrap();
    assert_eq!(doc.algebra.dim(), 2);
    let t = doc.map("T0").unwrap();
    assert_eq!(t.domain().labels(), ["e*", "f*"]);
    assert!(doc.tensor("r1").is_ok());
    assert!(matches!(doc.map("T9"), Err(Error::UnknownName(_))));
}

#[test]
fn built_in_representations() {
    let doc = parse(AFFINE).unwrap();
    assert_eq!(doc.representation("ad").unwrap().space().labels(), ["e", "f"]);
    assert_eq!(doc.representation("coad").unwrap().space().labels(), ["e*", "f*"]);
}

#[test]
fn reports_the_offending_line() {
    let bad_rational = AFFINE.replace("e f = 1 f", "e f = 1/0 f");
    assert_eq!(parse_error_line(&bad_rational), 7);
    let bad_label = AFFINE.replace("f* = 1 f", "f* = 1 h");
    assert_eq!(parse_error_line(&bad_label), 11);
    let bad_parity = AFFINE.replace("e f = 1 f", "e f = 1 e");
    assert_eq!(parse_error_line(&bad_parity), 7);
    let odd_tensor_even_entry = AFFINE.replace("f e = 1", "f f = 1");
    assert_eq!(parse_error_line(&odd_tensor_even_entry), 15);
}

#[test]
fn bracket_section_must_follow_space() {
    assert!(parse("[bracket]\n").is_err());
    assert!(parse("[space]\neven = e\n[tensor r]\ne e = 1\n").is_err());
}

#[test]
fn suspended_and_dual_space_references() {
    let text = format!("{AFFINE}\n[map psi : g -> sg parity even]\ne = 1 sf\nf = 1 se\n");
    let doc = parse(&text).unwrap();
    assert_eq!(doc.map("psi").unwrap().codomain().labels(), ["sf", "se"]);
}
