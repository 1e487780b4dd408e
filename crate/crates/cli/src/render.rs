use rrcomb::durfee::DecompositionRecord;
use rrcomb::Partition;

pub const MAX_WIDTH: usize = 80;
const ELLIPSIS: &str = "...";

/// One character per cell: `#` first rectangle, `=` second rectangle,
/// `a`/`b`/`c` for the cells of alpha, beta and gamma.
pub fn young_diagram(lambda: &Partition, rec: &DecompositionRecord) -> String {
    let s = rec.s;
    let w1 = s.saturating_sub(rec.m);
    let t = rec.t.unwrap_or(0);
    let w2 = t.saturating_sub(rec.m);
    let mut out = String::new();
    for (i, &part) in lambda.parts().iter().enumerate() {
        let row = i + 1;
        let cell = |col: usize| -> char {
            if row <= s {
                if col <= w1 {
                    '#'
                } else {
                    'a'
                }
            } else if rec.t.is_some() && row <= s + t {
                if col <= w2 {
                    '='
                } else {
                    'b'
                }
            } else {
                'c'
            }
        };
        let line: String = if part > MAX_WIDTH {
            let mut l: String = (1..=MAX_WIDTH - ELLIPSIS.len()).map(cell).collect();
            l.push_str(ELLIPSIS);
            l
        } else {
            (1..=part).map(cell).collect()
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub const LEGEND: &str = "legend: # first rectangle, = second rectangle, a alpha, b beta, c gamma";
