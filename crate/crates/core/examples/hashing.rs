//! Hash constructions built on level maps.
use modack::hashlab::{HMap, HashFunction, HashSpec};
use modack::Modulus;

fn main() -> modack::Result<()> {
    let n = Modulus::pow2(8)?;
    let single = HashFunction::new(HashSpec::single(n, HMap::modulo(5), HMap::div(3)))?;
    let dual = HashFunction::new(HashSpec::dual(n, HMap::modulo(5), HMap::div(3), HMap::offset_modulo(1, 4), HMap::new(1, 0, 7, None)?))?;

    for x in [0, 1, 17, 200, 255] {
        let (h, probes) = single.hash_traced(x)?;
        println!("single({x}) = {h:<3} via level {} at {}", probes[0].level, probes[0].arg);
        println!("dual({x})   = {}", dual.hash(x)?);
    }
    println!("single composed 5 times from 9 = {}", single.compose(9, 5)?);

    let spec = HashSpec::from_json(&single.spec().to_json())?;
    assert_eq!(&spec, single.spec());
    println!("{}", spec.to_json());
    Ok(())
}
