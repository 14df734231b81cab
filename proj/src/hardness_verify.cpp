namespace crosskit {
}
