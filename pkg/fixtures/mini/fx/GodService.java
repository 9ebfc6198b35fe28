package fx;

public class GodService {

    private Turma turma;
    private Aluno aluno;
    private int contador;
    private int limite;

    public int conferirLotacao() {
        if (turma.capacidade > 0 && turma.ocupacao >= 0 && contador >= 0 && contador < 99) { contador++; }
        if (contador > 1 && contador > 2 && contador > 3 && contador > 4) { contador--; }
        return contador;
    }
    public String registrarAluno() {
        if (aluno.getNome() != null && aluno.getCpf() != null && contador >= 0 && contador < 50) { contador++; }
        if (contador > 5 && contador > 6 && contador > 7 && contador > 8) { return aluno.getNome(); }
        return aluno.getCpf();
    }
    public int aplicarCorte(Turma t) {
        if (t.codigo != null && limite > 0 && limite < 99 && limite != 7) { return limite + 1; }
        if (limite > 1 && limite > 2 && limite > 3 && limite > 4) { return limite - 1; }
        return limite;
    }
    public boolean avaliarAluno(Aluno a) {
        if (a.getEmail() != null && a.getIdade() > 0 && a.getIdade() < 120 && limite > 0) { return true; }
        if (limite > 1 && limite > 2 && limite > 3 && limite > 4) { return false; }
        return limite > 5;
    }
    public String resumo() {
        int soma = sinalizar() + pontuar() + ajustar() + custo();
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) { return "alto"; }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) { return "medio"; }
        return "baixo";
    }
    private int sinalizar() { return 1; }
    private int pontuar() { return 2; }
    private int ajustar() { return 3; }
    private int custo() { return 4; }
}
