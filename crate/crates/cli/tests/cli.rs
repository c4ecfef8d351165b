use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn voiceshift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_voiceshift"))
        .args(args)
        .output()
        .expect("spawn voiceshift")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_voiceshift"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn voiceshift");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn active_transcript() {
    let out = voiceshift(&[
        "active",
        "a beautiful woman has bought a small apple on the big beautiful table.",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let first: Vec<&str> = text.lines().take(6).collect();
    assert_eq!(
        first,
        [
            "ActiveS: [a,beautiful,woman,has,bought,a,small,apple,on,the,big,beautiful,table]",
            "Tense: perfect_present",
            "ActiveRe: s(np(det(a),adj([beautiful]),n(woman)),aux(has),v(bought),np(det(a),adj([small]),n(apple),pp(pre(on),np(det(the),adj([big,beautiful]),n(table)))))",
            "PassiveS: [a,small,apple,on,the,big,beautiful,table,has,been,bought,by,a,beautiful,woman]",
            "PassiveRe: s(np(det(a),adj([small]),n(apple),pp(pre(on),np(det(the),adj([big,beautiful]),n(table)))),aux(has),auxTense(been),v(bought),agent(by),np(det(a),adj([beautiful]),n(woman)))",
            "true ;",
        ]
    );
    assert!(text.ends_with("true.\n"));
}

#[test]
fn first_flag_keeps_one_solution() {
    let out = voiceshift(&[
        "--first",
        "active",
        "a beautiful woman has bought a small apple on the big beautiful table.",
    ]);
    let text = stdout(&out);
    assert_eq!(text.matches("PassiveS:").count(), 1);
    assert!(text.ends_with("true.\n"));
}

#[test]
fn passive_transcript() {
    let out = voiceshift(&["passive", "a small apple should not be bought by him."]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "PassiveS: [a,small,apple,should,not,be,bought,by,him]\n\
         Tense: simple_present\n\
         ActiveS: [he,should,not,buy,a,small,apple]\n\
         ActiveRe: s(np(pro(he)),modal(should),pol(not),v(buy),np(det(a),adj([small]),n(apple)))\n\
         PassiveRe: s(np(det(a),adj([small]),n(apple)),modal(should),pol(not),aux(be),v(bought),agent(by),np(pro(him)))\n\
         true.\n"
    );
}

#[test]
fn sentence_from_stdin() {
    let out = with_stdin(&["passive"], "an apple is bought by him\n");
    assert!(out.status.success());
    assert!(stdout(&out).contains("ActiveS: [he,buys,an,apple]"));
}

#[test]
fn non_convertible_prints_false() {
    let out = voiceshift(&["active", "the man goes to school"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "false.\n");
}

#[test]
fn unknown_word_is_reported() {
    let out = voiceshift(&["active", "the man buys a zeppelin"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("zeppelin"), "{err}");
    assert!(err.contains("lexicon"), "{err}");
}

#[test]
fn json_output_has_all_fields() {
    let out = voiceshift(&["--format", "json", "active", "he buys an apple"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let line = text.lines().next().unwrap();
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    assert_eq!(v["tense"], "simple_present");
    assert_eq!(
        v["activeS"],
        serde_json::json!(["he", "buys", "an", "apple"])
    );
    assert_eq!(
        v["passiveS"],
        serde_json::json!(["an", "apple", "is", "bought", "by", "him"])
    );
    assert_eq!(v["activeRe"], "s(np(pro(he)),v(buys),np(det(an),n(apple)))");
    assert_eq!(
        v["passiveRe"],
        "s(np(det(an),n(apple)),aux(is),v(bought),agent(by),np(pro(him)))"
    );
}

#[test]
fn enumerate_is_deterministic() {
    let a = voiceshift(&["enumerate", "--limit", "3"]);
    let b = voiceshift(&["enumerate", "--limit", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.matches("ActiveS:").count(), 3);
    assert!(text.starts_with("1. ActiveS: "));

    let none = voiceshift(&["enumerate", "--limit", "0"]);
    assert!(none.status.success());
    assert!(none.stdout.is_empty());
}

#[test]
fn enumerate_respects_filters() {
    let out = voiceshift(&[
        "--format",
        "json",
        "enumerate",
        "--limit",
        "40",
        "--tense",
        "perfect_past",
        "--positive-only",
        "--no-modals",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 40);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["tense"], "perfect_past");
        assert!(!v["activeS"].as_array().unwrap().contains(&"not".into()));
    }
}

#[test]
fn enumerate_rejects_bad_tense() {
    let out = voiceshift(&["enumerate", "--tense", "pluperfect"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn test_suite_passes_on_builtin() {
    for which in ["all", "active", "passive"] {
        let out = voiceshift(&["test-suite", which]);
        assert!(out.status.success(), "{which}: {}", stdout(&out));
        assert!(stdout(&out).contains(" passed, 0 failed"));
    }
}

#[test]
fn test_suite_catches_corrupted_lexicon() {
    let builtin = include_str!("../../core/data/builtin.lex");
    let path = temp_file(
        "corrupted.lex",
        &format!("{builtin}\nverb buy buys bought buyed buying\n"),
    );
    let out = voiceshift(&["--lexicon", path.to_str().unwrap(), "test-suite"]);
    assert!(!out.status.success());
    assert!(stdout(&out).contains("FAIL "));
}

#[test]
fn custom_lexicon_is_used() {
    let path = temp_file(
        "tiny.lex",
        "det the\nnoun dog dogs\nnoun ball balls\nverb chase chases chased chased chasing\n",
    );
    let out = voiceshift(&[
        "--lexicon",
        path.to_str().unwrap(),
        "active",
        "the dogs chased the ball",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PassiveS: [the,ball,was,chased,by,the,dogs]"));
}

#[test]
fn malformed_lexicon_is_an_error() {
    let path = temp_file("bad.lex", "noun dog\n");
    let out = voiceshift(&["--lexicon", path.to_str().unwrap(), "active", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 1"));
}

#[test]
fn repl_handles_both_voices() {
    let out = with_stdin(
        &["repl"],
        "active: he buys an apple\npassive: an apple is bought by him\nnonsense\nactive: the man goes to school\nquit\nactive: ignored\n",
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PassiveS: [an,apple,is,bought,by,him]"));
    assert!(text.contains("ActiveS: [he,buys,an,apple]"));
    assert!(text.contains("error: expected"));
    assert!(text.contains("false."));
    assert!(!text.contains("ignored"));
}
