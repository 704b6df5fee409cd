//! Point-cloud writers: CSV with a header row, ASCII PLY with an integer
//! label per vertex and the label names in comments.

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Ply,
}

pub type Row = ([f64; 3], String);

pub fn write(format: Format, rows: &[Row], out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Csv => csv(rows, out),
        Format::Ply => ply(rows, out),
    }
}

fn csv(rows: &[Row], out: &mut dyn Write) -> Result<()> {
    let mut w = ::csv::WriterBuilder::new()
        .terminator(::csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(["x", "y", "z", "label"])?;
    for ([x, y, z], label) in rows {
        w.write_record([x.to_string(), y.to_string(), z.to_string(), label.clone()])?;
    }
    w.flush()?;
    Ok(())
}

fn ply(rows: &[Row], out: &mut dyn Write) -> Result<()> {
    let mut labels: Vec<&str> = Vec::new();
    let ids: Vec<usize> = rows
        .iter()
        .map(|(_, l)| match labels.iter().position(|x| x == l) {
            Some(i) => i,
            None => {
                labels.push(l);
                labels.len() - 1
            }
        })
        .collect();
    writeln!(out, "ply\nformat ascii 1.0")?;
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "comment label {i} {l}")?;
    }
    writeln!(out, "element vertex {}", rows.len())?;
    writeln!(out, "property double x\nproperty double y\nproperty double z\nproperty int label")?;
    writeln!(out, "end_header")?;
    for (([x, y, z], _), id) in rows.iter().zip(ids) {
        writeln!(out, "{x} {y} {z} {id}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> Vec<Row> {
        vec![
            ([0.0, 1.5, -2.0], "t:torus".into()),
            ([0.25, 0.0, 1e-3], "c:stem".into()),
            ([1.0, 2.0, 3.0], "t:torus".into()),
        ]
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write(Format::Csv, &rows(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "x,y,z,label\n0,1.5,-2,t:torus\n0.25,0,0.001,c:stem\n1,2,3,t:torus\n");
    }

    #[test]
    fn ply_layout() {
        let mut buf = Vec::new();
        write(Format::Ply, &rows(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(&lines[..5], ["ply", "format ascii 1.0", "comment label 0 t:torus", "comment label 1 c:stem", "element vertex 3"]);
        let body = &lines[lines.iter().position(|l| *l == "end_header").unwrap() + 1..];
        assert_eq!(body, ["0 1.5 -2 0", "0.25 0 0.001 1", "1 2 3 0"]);
    }
}
