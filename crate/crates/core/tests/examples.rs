macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }
    };
}

example!(normal_forms);
example!(twisted_cubic);
example!(veronese_presentation);
example!(segre);
example!(certify);
example!(koszul_dual);
example!(json_round_trip);
example!(numeric);

#[test]
fn normal_forms_runs() {
    let out = normal_forms::run().unwrap();
    assert!(out.contains("Nor(x2*x1*x0*x1) = q10*q20*q21^2 x0*x1*x1*x2"));
    assert!(!out.contains("agrees = false"));
}

#[test]
fn twisted_cubic_runs() {
    let out = twisted_cubic::run().unwrap();
    assert!(out.contains("y1*y2 - q y0*y3"));
    assert!(out.contains("at q = 1:\ny1*y1 - y0*y2\ny1*y2 - y0*y3\ny2*y2 - y1*y3\n"));
}

#[test]
fn veronese_presentation_runs() {
    let out = veronese_presentation::run(2, 2).unwrap();
    assert!(out.contains("|C2| = 15, |MV| = 6, |C3| = 28"));
    assert!(out.contains("lifted kernel basis: 21 relations"));
    assert!(veronese_presentation::run(1, 0).is_err());
}

#[test]
fn segre_runs() {
    let out = segre::run().unwrap();
    assert_eq!(out.matches("maps to zero = true").count(), 3);
}

#[test]
fn certify_runs() {
    let out = certify::run().unwrap();
    assert_eq!(out.matches(": PASS").count(), 3);
    assert_eq!(out.matches(": FAIL").count(), 2);
    assert!(out.contains("unresolved overlap"));
}

#[test]
fn koszul_dual_runs() {
    let out = koszul_dual::run().unwrap();
    assert!(out.contains("dimensions by degree: 1, 3, 3, 1, 0"));
}

#[test]
fn json_round_trip_runs() {
    json_round_trip::run().unwrap();
}

#[test]
fn numeric_runs() {
    let out = numeric::run().unwrap();
    assert!(out.contains("y2*y2 + 1/3 y0*y5"));
}
