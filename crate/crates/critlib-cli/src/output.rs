//! Output helpers shared by the subcommands: deterministic JSON, plain
//! text, and the Dynkin-diagram layout used for E-type configurations.

use std::process::ExitCode;

use critlib::chipfire::ChipConfig;
use critlib::rootsys::DynkinType;

pub fn ok_text(text: &str) {
    println!("{text}");
}

pub fn ok_json(value: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
}

pub fn fail(message: &str, json: bool) -> ExitCode {
    if json {
        eprintln!(
            "{}",
            serde_json::json!({"error": message})
        );
    } else {
        eprintln!("error: {message}");
    }
    ExitCode::from(1)
}

pub fn format_config(v: &ChipConfig) -> String {
    let parts: Vec<String> = v.0.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Weight coordinates in the diagram layout: for the E types the branch
/// node 2 is printed above the long row 1-3-4-5-6(-7)(-8); other types are
/// a single row.
pub fn format_weight_layout(ty: DynkinType, v: &ChipConfig) -> String {
    let vals: Vec<String> = v.0.iter().map(|x| x.to_string()).collect();
    if ty.family() == 'E' {
        let mut bottom: Vec<&str> = vec![&vals[0]];
        for item in &vals[2..] {
            bottom.push(item);
        }
        let widths: Vec<usize> = bottom.iter().map(|s| s.len()).collect();
        // node 2 sits above node 4, the third entry of the long row
        let offset = widths[0] + 1 + widths[1] + 1;
        format!(
            "{}{}\n{}\n",
            " ".repeat(offset),
            vals[1],
            bottom.join(" ")
        )
    } else {
        format!("{}\n", bottom_row(&vals))
    }
}

fn bottom_row(vals: &[String]) -> String {
    vals.join(" ")
}
