use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    let header = crate_dir.join("include").join("clausen.h");

    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        include_guard: Some("CLAUSEN_H".to_string()),
        cpp_compat: true,
        documentation: true,
        ..Default::default()
    };

    match cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
    {
        Ok(bindings) => {
            bindings.write_to_file(header);
        }
        Err(e) => {
            // keep the committed header if generation fails (e.g. during vendored builds)
            println!("cargo:warning=cbindgen failed: {e}");
        }
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
}
