use std::io::{self, Write};

use csv::{Terminator, WriterBuilder};

use crate::counting::OccurrenceMatrix;
use crate::matrix::SquareMatrix;

pub(crate) fn writer<W: Write>(out: W) -> csv::Writer<W> {
    WriterBuilder::new()
        .terminator(Terminator::Any(b'\n'))
        .from_writer(out)
}

pub(crate) fn csv_err(e: csv::Error) -> io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::other(format!("{other:?}")),
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn format_cell(v: f64) -> String {
    format!("{v}")
}

/// Labeled square matrix: header row of labels, then one labeled row per entity.
pub fn write_matrix_csv<W: Write>(labels: &[String], matrix: &SquareMatrix, out: W) -> io::Result<()> {
    let mut w = writer(out);
    let mut header = vec![String::new()];
    header.extend(labels.iter().cloned());
    w.write_record(&header).map_err(csv_err)?;
    for (label, row) in labels.iter().zip(matrix.rows()) {
        let mut record = vec![label.clone()];
        record.extend(row.iter().map(|&v| format_cell(v)));
        w.write_record(&record).map_err(csv_err)?;
    }
    w.flush()
}

pub fn export_matrix_csv(labels: &[String], matrix: &SquareMatrix) -> String {
    let mut buf = Vec::new();
    write_matrix_csv(labels, matrix, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("utf-8")
}

/// Documents × entities table of author counts.
pub fn write_occurrence_csv<W: Write>(occ: &OccurrenceMatrix, out: W) -> io::Result<()> {
    let mut w = writer(out);
    let mut header = vec![String::new()];
    header.extend(occ.entities.iter().cloned());
    w.write_record(&header).map_err(csv_err)?;
    for (doc, row) in occ.documents.iter().zip(occ.dense()) {
        let mut record = vec![doc.clone()];
        record.extend(row.iter().map(u32::to_string));
        w.write_record(&record).map_err(csv_err)?;
    }
    w.flush()
}
