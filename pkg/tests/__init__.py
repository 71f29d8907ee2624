"""Testes unitários para os estados estacionários de spin coletivos."""
