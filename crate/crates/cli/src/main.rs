fn main() { println!("{}", wbell::probe()); }
