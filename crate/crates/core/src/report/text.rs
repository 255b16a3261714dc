use std::fmt::Write;

use super::Report;

impl Report {
    /// Human-readable rendering; deterministic unless timing was requested.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let req = &self.request;
        let names = ["A", "B", "C", "D", "E", "F", "G"];
        let params: Vec<String> = names
            .iter()
            .zip(req.param_strings())
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        let _ = writeln!(s, "parameters: {} h={}", params.join(" "), req.h);
        let _ = writeln!(s, "summary: {}", self.summary);
        for t in &self.tests {
            let _ = writeln!(s, "\n[{}] {}({})", t.test, t.outcome, t.case_id);
            if let Some(order) = t.order_used {
                let _ = writeln!(s, "  order {order}, retries {}", t.precision_retries);
            }
            for w in &t.witnesses {
                let _ = writeln!(s, "  {}: {} = {}", w.kind, w.label, w.value);
                if let Some(locus) = &w.locus {
                    let _ = writeln!(s, "    vanishes on {locus} = 0");
                }
            }
            if let Some(note) = &t.note {
                let _ = writeln!(s, "  note: {note}");
            }
        }
        if !self.paper_discrepancies.is_empty() {
            let _ = writeln!(s, "\ndiscrepancies with printed values:");
            for d in &self.paper_discrepancies {
                let _ = writeln!(s, "  {}: printed {}; computed {}", d.topic, d.printed, d.computed);
            }
        }
        for e in &self.errors {
            let _ = writeln!(s, "error {}: {}", e.kind, e.message);
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(s, "elapsed: {ms} ms");
        }
        s
    }
}
