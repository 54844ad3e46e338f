namespace opd {
}
