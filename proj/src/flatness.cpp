namespace flatwall {}
