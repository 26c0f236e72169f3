use unichord::{color_value, composed, named, recognize_value};

#[test]
fn house_and_petersen() {
    let (n, e) = named("house").unwrap();
    let v = recognize_value(n, &e).unwrap();
    assert_eq!(v["long_unichord_free"], false);
    assert!(v["witness"].is_object());
    assert!(color_value(n, &e, false).is_err());

    let (n, e) = named("petersen").unwrap();
    let c = color_value(n, &e, true).unwrap();
    assert!(c["colors"].as_u64().unwrap() <= 4);
    assert_eq!(c["assignment"].as_object().unwrap().len(), 10);
}

#[test]
fn composed_graphs_are_reproducible_members() {
    let (n, e) = composed(5, 80);
    assert_eq!(composed(5, 80), (n, e.clone()));
    assert_eq!(recognize_value(n, &e).unwrap()["long_unichord_free"], true);
    let c = color_value(n, &e, false).unwrap();
    assert!(c["colors"].as_u64().unwrap() <= c["bound"].as_u64().unwrap());
}

#[test]
fn bad_edges_are_errors() {
    assert!(recognize_value(3, &vec![(0, 3)]).is_err());
    assert!(recognize_value(3, &vec![(1, 1)]).is_err());
}
