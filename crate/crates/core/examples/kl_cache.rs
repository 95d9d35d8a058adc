// Computes KL tables into a store, saves them, and reloads them into a
// fresh store.

use std::error::Error;

use klheap::KlStore;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let path = std::env::temp_dir().join(format!("klheap-example-{}.jsonl", std::process::id()));
    let store = KlStore::new();
    let w0 = "4,3,2,1".parse()?;
    let p = store.table(&w0)?;
    store.save(&path)?;

    let fresh = KlStore::new();
    let loaded = fresh.load(&path)?;
    println!("cached {} tables, reloaded {loaded}", store.len());
    assert_eq!(fresh.table(&w0)?.entries(), p.entries());
    std::fs::remove_file(&path)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
