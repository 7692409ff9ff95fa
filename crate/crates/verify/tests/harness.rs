use proptest::prelude::*;
use racah_verify::check::{digest, record};
use racah_verify::config::{name_hash, workers, WORKERS_ENV};
use racah_verify::eval::{evaluate, parse_list};
use racah_verify::{run_suite, Fault, SuiteConfig, Tier, VerifyError};

proptest! {
    #[test]
    fn parse_list_round_trips(v in prop::collection::vec((-500i64..500, 1i64..50), 0..6)) {
        let text: Vec<String> = v.iter().map(|(a, b)| format!("{}/{}", a, b)).collect();
        let parsed = parse_list(&text.join(",")).unwrap();
        let back: Vec<String> = parsed.iter().map(|r| r.to_string()).collect();
        prop_assert_eq!(parse_list(&back.join(",")).unwrap(), parsed);
    }

    #[test]
    fn suite_seed_is_a_xor(seed in any::<u64>()) {
        let cfg = SuiteConfig::new("whipple", seed, Tier::Smoke);
        prop_assert_eq!(cfg.suite_seed() ^ seed, name_hash("whipple"));
    }

    #[test]
    fn digest_is_short_hex(s in ".*") {
        let d = digest(&s);
        prop_assert_eq!(d.len(), 16);
        prop_assert!(d.chars().all(|c| c.is_ascii_hexdigit()));
    }
}

#[test]
fn faults_parse_by_name() {
    for f in Fault::all() {
        assert_eq!(f.name().parse::<Fault>().unwrap(), f);
    }
    assert!("Z9".parse::<Fault>().is_err());
}

#[test]
fn invalid_configs_are_rejected() {
    let mut cfg = SuiteConfig::new("triangularity", 1, Tier::Smoke);
    cfg.p = Some(9);
    assert!(matches!(run_suite(&cfg), Err(VerifyError::ConfigInvalid(_))));
    let cfg = SuiteConfig::new("nope", 1, Tier::Smoke);
    assert!(matches!(run_suite(&cfg), Err(VerifyError::UnknownSuite(_))));
}

#[test]
fn library_errors_become_failed_records() {
    let r = record("x", "anchor", "inputs", Err(racah_core::Error::ZeroNormalization));
    assert!(!r.pass);
    assert!(r.witness.unwrap()["error"].contains("normalizing"));
}

#[test]
fn evaluate_checks_arity() {
    let q = |s: &str| parse_list(s).unwrap();
    assert!(matches!(evaluate("racah", &[1, 0], &q("1,2"), &q("1,2,3")), Err(VerifyError::ConfigInvalid(_))));
    let v = evaluate("krawtchouk", &[0, 0], &q("1,2"), &q("1/4,1/3,4")).unwrap();
    assert_eq!(v, racah_core::scalar::int(1));
}

#[test]
fn worker_count_is_positive() {
    // the variable may be set by the caller; only check the default path
    if std::env::var(WORKERS_ENV).is_err() {
        assert!(workers().unwrap() >= 1);
    }
}
