namespace qan {
}
