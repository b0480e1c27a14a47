namespace spinweyl {
}
