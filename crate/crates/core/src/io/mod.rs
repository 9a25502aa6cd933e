//! File formats and reports used by the command-line front end.

mod report;
mod vector_file;

pub use report::{
    certify_report, AnalyzeReport, BlockReport, BlockVerdict, CertificateReport, CertifyOutcome, GlobalBounds, Timings,
    REPORT_SCHEMA, REPORT_SCHEMA_VERSION, REPORT_TOL,
};
pub use vector_file::{
    from_csv, from_json, read_vector_file, to_csv, to_json, write_vector_file, FileFormat, FormatError, VectorData,
    VECTOR_FILE_FORMAT, VECTOR_FILE_VERSION,
};
