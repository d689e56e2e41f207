//! Column tables and their CSV and SVG renderings.

use std::fmt::Write;

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    pub unit: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<Column>,
}

impl Table {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, unit: impl Into<String>, values: Vec<f64>) {
        self.columns.push(Column { name: name.into(), unit: unit.into(), values });
    }

    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, |c| c.values.len())
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns.iter().find(|c| c.name == name).map(|c| c.values.as_slice())
    }

    /// Comma separated, header `name (unit)`, 17 significant digits, LF.
    pub fn to_csv(&self) -> String {
        let rows = self.rows();
        assert!(self.columns.iter().all(|c| c.values.len() == rows), "ragged table");
        let mut out = String::new();
        let header: Vec<String> = self.columns.iter().map(|c| format!("{} ({})", c.name, c.unit)).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for i in 0..rows {
            for (j, c) in self.columns.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                write_number(&mut out, c.values[i]);
            }
            out.push('\n');
        }
        out
    }

    /// Line plot of every column against the first. Non-finite values
    /// break the lines.
    pub fn to_svg(&self, title: &str) -> String {
        const W: f64 = 640.0;
        const H: f64 = 420.0;
        const PAD: f64 = 50.0;
        const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#000000", "#9467bd", "#ff7f0e"];
        let mut s = String::new();
        let _ =
            writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
        let _ =
            writeln!(s, r#"<text x="{PAD}" y="24" font-family="sans-serif" font-size="14">{}</text>"#, escape(title));
        let Some((x, ys)) = self.columns.split_first() else {
            s.push_str("</svg>\n");
            return s;
        };
        let range = |v: &mut dyn Iterator<Item = f64>| {
            v.filter(|x| x.is_finite()).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
        };
        let (x0, x1) = range(&mut x.values.iter().copied());
        let (y0, y1) = range(&mut ys.iter().flat_map(|c| c.values.iter().copied()));
        let span = |a: f64, b: f64| if b > a { b - a } else { 1.0 };
        let px = |v: f64| PAD + (v - x0) / span(x0, x1) * (W - 2.0 * PAD);
        let py = |v: f64| H - PAD - (v - y0) / span(y0, y1) * (H - 2.0 * PAD);
        let _ = writeln!(
            s,
            r##"<rect x="{PAD}" y="{PAD}" width="{}" height="{}" fill="none" stroke="#888"/>"##,
            W - 2.0 * PAD,
            H - 2.0 * PAD
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{} ({})</text>"#,
            W / 2.0,
            H - 12.0,
            escape(&x.name),
            escape(&x.unit)
        );
        for (k, c) in ys.iter().enumerate() {
            let color = COLORS[k % COLORS.len()];
            let mut d = String::new();
            let mut pen_down = false;
            for (&xv, &yv) in x.values.iter().zip(&c.values) {
                if xv.is_finite() && yv.is_finite() {
                    let _ = write!(d, "{}{:.2},{:.2} ", if pen_down { "L" } else { "M" }, px(xv), py(yv));
                    pen_down = true;
                } else {
                    pen_down = false;
                }
            }
            let _ = writeln!(
                s,
                r#"<path d="{}" fill="none" stroke="{color}" stroke-width="1.5"><title>{}</title></path>"#,
                d.trim_end(),
                escape(&c.name)
            );
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11" fill="{color}">{}</text>"#,
                W - PAD + 4.0 - 120.0,
                PAD + 14.0 * (k as f64 + 1.0),
                escape(&c.name)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn write_number(out: &mut String, v: f64) {
    if v.is_nan() {
        out.push_str("NaN");
    } else if v.is_infinite() {
        out.push_str(if v > 0.0 { "inf" } else { "-inf" });
    } else {
        let _ = write!(out, "{v:.16e}");
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trips_doubles() {
        let mut t = Table::new();
        let v = vec![0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23];
        t.push("x", "eV", v.clone());
        let csv = t.to_csv();
        assert!(csv.starts_with("x (eV)\n"));
        let back: Vec<f64> = csv.lines().skip(1).map(|l| l.parse().unwrap()).collect();
        assert_eq!(back, v);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn nan_written_literally() {
        let mut t = Table::new();
        t.push("a", "1", vec![f64::NAN]);
        t.push("b", "1", vec![1.0]);
        assert_eq!(t.to_csv(), "a (1),b (1)\nNaN,1.0000000000000000e0\n");
    }
}
